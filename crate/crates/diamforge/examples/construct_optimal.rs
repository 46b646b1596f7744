//! Build the optimal complex for a few orders and report how each was made.
//!
//! `cargo run --example construct_optimal -- 29 34 100`

use diamforge::assembly::{construct_optimal, method_for};
use diamforge::complex::encode_triples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut orders: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    if orders.is_empty() {
        orders = vec![6, 13, 20, 23, 34];
    }
    for n in orders {
        let (seq, cert) = construct_optimal(n)?;
        println!(
            "n = {n:>3}  {:<24} triangles {:>5}  diameter {:>5}  optimum {:>5}  uncovered {:?}",
            format!("{:?}", method_for(n).unwrap()),
            seq.len(),
            cert.diameter.unwrap_or(0),
            cert.optimum,
            cert.uncovered_edges,
        );
        if n <= 13 {
            let pair = encode_triples(&seq)?;
            println!("         labels {:?}\n         layout {:?}", pair.labels, pair.layout);
        }
    }
    Ok(())
}
