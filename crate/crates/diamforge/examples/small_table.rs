//! Certify every stored small-order walk.

use diamforge::assembly::{small_table, table_orders};
use diamforge::complex::{certify, expand_pair};

fn main() -> Result<(), diamforge::Error> {
    for n in table_orders() {
        let entry = small_table(n).expect("listed order");
        let cert = certify(&expand_pair(&entry.pair)?, n)?;
        println!(
            "n = {n:>2}  diameter {:>3}  optimum {:>3}  good {}  labels {}",
            cert.diameter.unwrap_or(0),
            cert.optimum,
            cert.good,
            entry.pair.labels.len()
        );
    }
    Ok(())
}
