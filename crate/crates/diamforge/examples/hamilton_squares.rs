//! Partition K_p into squares of Hamilton cycles for suitable primes, and
//! check the stored decomposition of K_105.

use diamforge::hampack::{builtin_105, decompose_prime, is_prime, ord_mod, verify_partition};

fn main() -> Result<(), diamforge::Error> {
    for p in (5..=200u32).filter(|&p| is_prime(p as u64) && p % 4 == 1) {
        let ord = ord_mod(2, p as u64)?;
        if ord % 4 != 0 {
            println!("p = {p:>3}  ord_p(2) = {ord:>3}  skipped");
            continue;
        }
        let d = decompose_prime(p)?;
        let r = verify_partition(&d);
        println!("p = {p:>3}  ord_p(2) = {ord:>3}  squares {:>3}  exact {}", d.cycles.len(), r.success);
    }
    let d = builtin_105()?;
    let r = verify_partition(&d);
    println!("n = 105  squares {}  exact {}  first {:?}", d.cycles.len(), r.success, &d.cycles[0].order[..7]);
    Ok(())
}
