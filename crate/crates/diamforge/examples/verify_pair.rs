//! Decode a labels/layout pair and certify it.

use diamforge::complex::{certify, expand_pair, LabelsLayout};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = LabelsLayout {
        n: 9,
        labels: vec![0, 1, 2, 3, 4, 0, 5, 6, 1, 7, 4, 8, 6, 2, 5, 7, 3, 8, 0],
        layout: vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
    };
    pair.validate()?;
    let seq = expand_pair(&pair)?;
    for (i, t) in seq.triangles.iter().enumerate() {
        println!("{i:>2}: {:?}", t.vertices());
    }
    let cert = certify(&seq, pair.n)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(())
}
