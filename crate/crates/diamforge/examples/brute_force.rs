//! Exhaustive search for the largest diameter on a few vertices.
//!
//! `cargo run --release --example brute_force -- 8`

use diamforge::complex::hs_max_diameter;
use diamforge::oracle::{search_with, SearchConfig};

fn main() -> Result<(), diamforge::Error> {
    let top: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let jobs = std::thread::available_parallelism().map_or(1, |j| j.get());
    for n in 3..=top {
        let r = search_with(n, &SearchConfig { jobs, ..SearchConfig::default() })?;
        println!(
            "n = {n:>2}  best {:>3}  bound {:>3}  exhaustive {}  nodes {:>10}  labels {:?}  layout {:?}",
            r.best_diameter,
            hs_max_diameter(n as u64)?,
            r.exhaustive,
            r.nodes_explored,
            r.witness.labels,
            r.witness.layout
        );
    }
    Ok(())
}
