//! The three sequence families, their blue terms and missing residues, and
//! a check that each circular walk covers exactly the predicted edges.

use diamforge::complex::{covered_edges, is_good};
use diamforge::genseq::*;

fn show(name: &str, gs: &GeneratingSequence) -> Result<(), diamforge::Error> {
    let report = verify_generating_sequence(gs);
    let seq = circular_complex(gs)?;
    let exact = covered_edges(&seq) == residue_prediction(gs);
    println!(
        "{name:<10} n = {:>3}  terms {:?}  turns {:?}\n{:<10} blue {:?}  missing {:?}  valid {}  good {}  coverage exact {}",
        gs.n,
        gs.terms,
        gs.turns,
        "",
        blue_terms(gs),
        report.missing,
        report.valid,
        is_good(&seq),
        exact
    );
    Ok(())
}

fn main() -> Result<(), diamforge::Error> {
    let k: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    show("full", &gs_full(k)?)?;
    show("no 1,2", &gs_missing_12(k)?.0)?;
    show("no 1,2,4,8", &gs_missing_1248(k.max(7))?.0)?;
    Ok(())
}
