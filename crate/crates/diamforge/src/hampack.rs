//! Partitions of `E(K_n)` into squares of Hamilton cycles.
//!
//! The square of a Hamilton cycle joins every vertex to the two vertices
//! before and after it on the cycle. For a prime `p` where `ord_p(2)` is a
//! multiple of 4, the arithmetic orderings `0, s, 2s, …` with step
//! `s = a·2^k` partition `K_p`. Here `a` runs over coset representatives of
//! `⟨2⟩` and `k` over the even numbers below `ord_p(2)/2`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Edge, Vertex};
use crate::{Error, Result};

/// A Hamilton cycle given as a cyclic ordering of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleSquare {
    pub order: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub n: u32,
    pub cycles: Vec<CycleSquare>,
}

/// Pairs at cyclic distance 1 or 2; `2n` edges for `n >= 5`.
pub fn square_edges(c: &CycleSquare) -> Result<Vec<Edge>> {
    let n = c.order.len();
    if n < 5 {
        return Err(Error::TooSmall { n: n as u64, min: 5 });
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        for step in [1, 2] {
            let (u, v) = (c.order[i], c.order[(i + step) % n]);
            edges.push(Edge::try_new(u, v).ok_or(Error::RepeatedVertex(u))?);
        }
    }
    Ok(edges)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut f = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            f.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        f.push(x);
    }
    f
}

/// Multiplicative order of `base` modulo the prime `p`.
pub fn ord_mod(base: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if base.is_multiple_of(p) {
        return Err(Error::NotInvertible { base, p });
    }
    let mut ord = p - 1;
    for q in prime_factors(p - 1) {
        while ord.is_multiple_of(q) && pow_mod(base, ord / q, p) == 1 {
            ord /= q;
        }
    }
    Ok(ord)
}

fn arithmetic(n: u32, step: u64) -> CycleSquare {
    CycleSquare { order: (0..n as u64).map(|i| (i * step % n as u64) as Vertex).collect() }
}

/// The coset construction for a suitable prime.
pub fn decompose_prime(p: u32) -> Result<Decomposition> {
    let pp = p as u64;
    let ord = ord_mod(2, pp)?;
    if pp % 4 != 1 || ord % 4 != 0 {
        return Err(Error::UnsuitablePrime { p: pp, ord });
    }
    let mut seen = vec![false; p as usize];
    let mut cycles = Vec::with_capacity((p as usize - 1) / 4);
    for a in 1..pp {
        if seen[a as usize] {
            continue;
        }
        let mut x = a;
        for _ in 0..ord {
            seen[x as usize] = true;
            x = x * 2 % pp;
        }
        for k in (0..ord / 2).step_by(2) {
            cycles.push(arithmetic(p, a * pow_mod(2, k, pp) % pp));
        }
    }
    Ok(Decomposition { n: p, cycles })
}

/// The six sequences for `n = 105`.
pub const N105_SEQUENCES: [&[i64]; 6] = [
    &[19, 10, 4],
    &[-40, -43, 5],
    &[-41, 28, 25],
    &[-48, 6, 21, -18, -26],
    &[-17, 8, 51, 47, -49],
    &[-30, -20, -12, 36, 1, -34, 45],
];

/// Each sequence of length `L` gives `L` cycles, started at `0, …, L-1` and
/// stepped by the sequence terms in turn.
pub fn cycles_from_sequences(n: u32, seqs: &[&[i64]]) -> Result<Decomposition> {
    let nn = n as i64;
    let mut cycles = Vec::new();
    for seq in seqs {
        let bad = |reason: String| Error::BadOrdering { seq: seq.to_vec(), reason };
        let l = seq.len();
        if l == 0 || !(n as usize).is_multiple_of(l) {
            return Err(bad(format!("length {l} does not divide {n}")));
        }
        if seq.iter().any(|a| a.rem_euclid(nn) == 0) {
            return Err(bad("zero step".into()));
        }
        for start in 0..l {
            let mut order = Vec::with_capacity(n as usize);
            let mut seen = vec![false; n as usize];
            let mut x = start as i64;
            for i in 0..n as usize {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(bad(format!("start {start} revisits {x}")));
                }
                order.push(x as Vertex);
                x = (x + seq[i % l]).rem_euclid(nn);
            }
            cycles.push(CycleSquare { order });
        }
    }
    Ok(Decomposition { n, cycles })
}

/// The built-in decomposition of `K_105` into 26 squares.
pub fn builtin_105() -> Result<Decomposition> {
    cycles_from_sequences(105, &N105_SEQUENCES)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub success: bool,
    pub cycle_count: usize,
    pub missing: Vec<Edge>,
    pub doubled: Vec<Edge>,
}

/// Exact check that the squares cover every edge of `K_n` once.
pub fn verify_partition(d: &Decomposition) -> PartitionReport {
    let n = d.n;
    let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut malformed = false;
    for c in &d.cycles {
        let mut sorted = c.order.clone();
        sorted.sort_unstable();
        malformed |= sorted.len() != n as usize || sorted.iter().enumerate().any(|(i, &v)| v != i as Vertex);
        match square_edges(c) {
            Ok(edges) => edges.into_iter().for_each(|e| *count.entry(e).or_insert(0) += 1),
            Err(_) => malformed = true,
        }
    }
    let missing: Vec<Edge> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))).filter(|e| !count.contains_key(e)).collect();
    let doubled: Vec<Edge> = count.iter().filter(|(_, &c)| c > 1).map(|(e, _)| *e).collect();
    let want = if n % 4 == 1 { Some((n as usize - 1) / 4) } else { None };
    let success = !malformed && missing.is_empty() && doubled.is_empty() && want == Some(d.cycles.len());
    PartitionReport { success, cycle_count: d.cycles.len(), missing, doubled }
}

/// Number of cosets of `⟨2⟩` in `F_p^*`.
pub fn coset_count(p: u64) -> Result<u64> {
    Ok((p - 1) / ord_mod(2, p)?)
}
