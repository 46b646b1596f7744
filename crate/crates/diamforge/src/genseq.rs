//! Generating sequences over `Z/nZ`, `n = 4k + 1`.
//!
//! A sequence `a_0, …, a_{m-1}` with turn set `I` is walked around `Z/nZ`
//! (`x_{i+1} = x_i + a_{i mod m}`) `n` times. The triangles cover the
//! "red" differences `±a_i` and the "blue" differences `±c_i`, where
//! `c_i = a_i + a_{i+1}`, or `a_{i-1} + a_i + a_{i+1}` when `i ∈ I`. If
//! those `4m` values are distinct and `Σ a_i` is a unit, the circular walk
//! covers every edge of each covered residue exactly once.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::complex::{edge_multiplicity, expand_pair, Edge, LabelsLayout, TriangleSeq};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingSequence {
    pub n: u32,
    /// Reduced into `[0, n)`.
    pub terms: Vec<u32>,
    pub turns: BTreeSet<usize>,
}

impl GeneratingSequence {
    /// Terms may be negative; they are reduced mod `n`.
    pub fn new(n: u32, terms: &[i64], turns: &[usize]) -> Result<GeneratingSequence> {
        if n < 5 || n % 4 != 1 {
            return Err(Error::InvalidSequence(format!("n = {n} is not 1 mod 4")));
        }
        if terms.is_empty() {
            return Err(Error::InvalidSequence("no terms".into()));
        }
        let terms: Vec<u32> = terms.iter().map(|&a| a.rem_euclid(n as i64) as u32).collect();
        if let Some(i) = terms.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSequence(format!("term {i} is 0 mod {n}")));
        }
        if let Some(&i) = turns.iter().find(|&&i| i >= terms.len()) {
            return Err(Error::InvalidSequence(format!("turn index {i} out of range")));
        }
        Ok(GeneratingSequence { n, terms, turns: turns.iter().copied().collect() })
    }

    pub fn m(&self) -> usize {
        self.terms.len()
    }

    pub fn k(&self) -> u32 {
        (self.n - 1) / 4
    }
}

/// Canonical residue of a difference: the representative in `1..=(n-1)/2`.
pub fn residue(d: i64, n: u32) -> u32 {
    let r = d.rem_euclid(n as i64) as u32;
    r.min(n - r)
}

/// `c_0, …, c_{m-1}` reduced mod `n`.
pub fn blue_terms(gs: &GeneratingSequence) -> Vec<u32> {
    let (n, m, a) = (gs.n as u64, gs.m(), &gs.terms);
    (0..m)
        .map(|i| {
            let mut c = a[i] as u64 + a[(i + 1) % m] as u64;
            if gs.turns.contains(&i) {
                c += a[(i + m - 1) % m] as u64;
            }
            (c % n) as u32
        })
        .collect()
}

/// Residues hit by a term or a blue term.
pub fn covered_residues(gs: &GeneratingSequence) -> BTreeSet<u32> {
    gs.terms.iter().chain(blue_terms(gs).iter()).map(|&v| residue(v as i64, gs.n)).filter(|&r| r != 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqReport {
    pub valid: bool,
    pub missing: Vec<u32>,
    pub reason: Option<String>,
}

pub fn verify_generating_sequence(gs: &GeneratingSequence) -> SeqReport {
    let n = gs.n;
    let m = gs.m();
    let covered = covered_residues(gs);
    let missing = (1..=(n - 1) / 2).filter(|r| !covered.contains(r)).collect();
    let sum = gs.terms.iter().map(|&a| a as u64).sum::<u64>() % n as u64;
    let reason = if sum.gcd(&(n as u64)) != 1 {
        Some(format!("sum of terms {sum} shares a factor with {n}"))
    } else if let Some(i) = gs.turns.iter().find(|&&i| gs.turns.contains(&((i + 1) % m))) {
        Some(format!("turns at {i} and {}", (i + 1) % m))
    } else {
        let mut seen = BTreeSet::new();
        let blue = blue_terms(gs);
        let signed = gs.terms.iter().chain(blue.iter()).flat_map(|&v| [v, (n - v) % n]);
        let mut clash = None;
        for v in signed {
            if v == 0 || !seen.insert(v) {
                clash = Some(v);
                break;
            }
        }
        clash.map(|v| format!("value {v} occurs twice among ±a_i, ±c_i"))
    };
    SeqReport { valid: reason.is_none(), missing, reason }
}

/// Edges of `Z/nZ` whose residue is covered.
pub fn residue_prediction(gs: &GeneratingSequence) -> BTreeSet<Edge> {
    let n = gs.n;
    let covered = covered_residues(gs);
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| covered.contains(&residue(v as i64 - u as i64, n)))
        .map(|(u, v)| Edge::new(u, v))
        .collect()
}

fn family(n: u32, terms: &[i64], turns: &[usize]) -> GeneratingSequence {
    GeneratingSequence::new(n, terms, turns).expect("family terms are nonzero")
}

/// Sequence of length `k` covering every residue mod `4k + 1`.
pub fn gs_full(k: u32) -> Result<GeneratingSequence> {
    if k < 3 {
        return Err(Error::KOutOfRange { k, min: 3 });
    }
    let n = 4 * k + 1;
    let l = (k / 2) as i64;
    Ok(match k {
        3 => family(n, &[1, 2, 4], &[]),
        4 => family(n, &[1, 2, 6, 4], &[]),
        5 => family(n, &[1, 2, 7, 6, 4], &[]),
        _ if k % 2 == 1 => {
            let mut t = vec![-4 * l + 6, 4 * l + 2, -4, -9, 2, 1, 11];
            for i in 1..=l - 3 {
                t.extend([4 * i + 2, 4 * i + 11]);
            }
            family(n, &t, &[])
        }
        _ => {
            let t: Vec<i64> = (1..=l).flat_map(|i| [4 * i - 1, 4 * i - 2]).collect();
            family(n, &t, &[k as usize - 1])
        }
    })
}

/// Which parts of the circular walk to remove and keep at the ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSpec {
    /// Singly covered edge whose triangle is removed.
    pub destroyed_edge: Edge,
    /// Must end up free in the last triangle.
    pub end_edge: Option<Edge>,
    /// Must end up free in the first triangle.
    pub second_end_edge: Option<Edge>,
}

/// Length `k - 1`, residues 1 and 2 missing. The cut leaves `{0, 4k-2}` free
/// at the end of the walk.
pub fn gs_missing_12(k: u32) -> Result<(GeneratingSequence, CutSpec)> {
    if k < 4 {
        return Err(Error::KOutOfRange { k, min: 4 });
    }
    let n = 4 * k + 1;
    let l = (k / 2) as i64;
    let gs = match k {
        4 => family(n, &[3, 4, 8], &[]),
        5 => family(n, &[4, 7, 6, -9], &[]),
        6 => family(n, &[4, 10, 7, 6, -9], &[]),
        7 => family(n, &[11, 8, -12, 7, 6, 3], &[]),
        _ => {
            let (mut t, turn) =
                if k % 2 == 1 { (vec![8, -5, 4 * l - 1, 4, -16, 7], 2) } else { (vec![4, 4 * l - 6, 9, -12, 7], 0) };
            for i in 1..=l - 3 {
                t.extend([4 * i + 2, 4 * i + 7]);
            }
            family(n, &t, &[turn])
        }
    };
    let seq = circular_complex(&gs)?;
    let spec = find_cut(&seq, Some(Edge::new(0, 4 * k - 2)), None)?;
    Ok((gs, spec))
}

/// Cut of the [`gs_missing_12`] walk at `{0,13}` leaving `{0,7}` at the end.
/// Needs `k >= 5`.
pub fn cut_spec_0_13(k: u32) -> Result<CutSpec> {
    if k < 5 {
        return Err(Error::KOutOfRange { k, min: 5 });
    }
    Ok(CutSpec { destroyed_edge: Edge::new(0, 13), end_edge: Some(Edge::new(0, 7)), second_end_edge: None })
}

/// Length `k - 2`, residues 1, 2, 4 and 8 missing. The cut removes the
/// triangle `{0,6,17}`, so `{6,17}` and `{0,6}` end up at the two ends.
pub fn gs_missing_1248(k: u32) -> Result<(GeneratingSequence, CutSpec)> {
    if k < 7 {
        return Err(Error::KOutOfRange { k, min: 7 });
    }
    let n = 4 * k + 1;
    let l = (k / 2) as i64;
    let gs = match k {
        7 => family(n, &[5, 14, 3, 6, 11], &[1]),
        8 => family(n, &[3, 9, 5, 6, 11, 7], &[2]),
        _ if k % 2 == 1 => {
            let mut t = vec![7, 5, 4 * l - 6, 13, -16, -6, 17];
            for i in 1..=l - 4 {
                t.extend([4 * i + 6, 4 * i + 11]);
            }
            family(n, &t, &[4, 6])
        }
        _ => {
            let mut t = vec![-4 * l + 1, 5, -4 * l + 5, -3, -13, 6];
            for i in 1..=l - 4 {
                t.extend([4 * i + 7, 4 * i + 6]);
            }
            family(n, &t, &[1])
        }
    };
    let spec = CutSpec {
        destroyed_edge: Edge::new(0, 17),
        end_edge: Some(Edge::new(6, 17)),
        second_end_edge: Some(Edge::new(0, 6)),
    };
    Ok((gs, spec))
}

/// Labels and layout of the circular walk, starting at 0.
///
/// The turn for index `i ∈ I` happens two labels after `a_i` is added. The
/// first triangle is always a plain `{x0, x1, x2}`, so when `0 ∈ I` the
/// sequence is rotated by one place first; this only translates the walk.
pub fn expand_to_circular(gs: &GeneratingSequence) -> Result<LabelsLayout> {
    let report = verify_generating_sequence(gs);
    if !report.valid {
        return Err(Error::InvalidSequence(report.reason.unwrap_or_default()));
    }
    let (n, m) = (gs.n as u64, gs.m());
    let s = (0..m).find(|i| !gs.turns.contains(i)).unwrap_or(0);
    let terms: Vec<u64> = (0..m).map(|j| gs.terms[(j + s) % m] as u64).collect();
    let turns: BTreeSet<usize> = gs.turns.iter().map(|&i| (i + m - s) % m).collect();
    let len = m * gs.n as usize + 2;
    let mut labels = Vec::with_capacity(len);
    let mut x = 0u64;
    for i in 0..len {
        labels.push(x as u32);
        x = (x + terms[i % m]) % n;
    }
    let layout = (3..len).map(|l| turns.contains(&((l - 2) % m)) as u8).collect();
    Ok(LabelsLayout { n: gs.n, labels, layout })
}

pub fn circular_complex(gs: &GeneratingSequence) -> Result<TriangleSeq> {
    expand_pair(&expand_to_circular(gs)?)
}

/// Scan from triangle 0 for the first cut that satisfies the end constraints.
pub fn find_cut(seq: &TriangleSeq, end: Option<Edge>, second: Option<Edge>) -> Result<CutSpec> {
    let mult = edge_multiplicity(seq);
    let t = &seq.triangles;
    let len = t.len();
    if !seq.circular || len < 4 {
        return Err(Error::CutUnsatisfiable { destroyed: None, end });
    }
    for i in 0..len {
        let removed = t[i];
        let free_after = |e: Edge, at: usize| {
            t[at].contains_edge(e) && mult.get(&e).copied().unwrap_or(0) - removed.contains_edge(e) as usize == 1
        };
        let (first, last) = ((i + 1) % len, (i + len - 1) % len);
        let fits = |x: Option<Edge>, y: Option<Edge>| {
            x.is_none_or(|e| free_after(e, last)) && y.is_none_or(|e| free_after(e, first))
        };
        if !(fits(end, second) || fits(second, end)) {
            continue;
        }
        if let Some(e) = removed.edges().into_iter().find(|e| mult[e] == 1) {
            return Ok(CutSpec { destroyed_edge: e, end_edge: end, second_end_edge: second });
        }
    }
    Err(Error::CutUnsatisfiable { destroyed: None, end })
}

/// Remove the triangle holding `destroyed_edge` and open the walk there.
///
/// The result is oriented so that `end_edge` is free in the last triangle
/// and `second_end_edge` is free in the first.
pub fn cut_circular(seq: &TriangleSeq, spec: &CutSpec) -> Result<TriangleSeq> {
    let fail = || Error::CutUnsatisfiable { destroyed: Some(spec.destroyed_edge), end: spec.end_edge };
    if !seq.circular {
        return Err(fail());
    }
    let holders: Vec<usize> = seq
        .triangles
        .iter()
        .enumerate()
        .filter(|(_, t)| t.contains_edge(spec.destroyed_edge))
        .map(|(i, _)| i)
        .collect();
    let [i] = holders[..] else { return Err(fail()) };
    let mut tris: Vec<_> = seq.triangles[i + 1..].iter().chain(&seq.triangles[..i]).copied().collect();
    let mult: BTreeMap<Edge, usize> = edge_multiplicity(&TriangleSeq::linear(tris.clone()));
    let free = |e: Edge, t: &crate::complex::Triangle| t.contains_edge(e) && mult.get(&e) == Some(&1);
    match (spec.end_edge, spec.second_end_edge) {
        (Some(e), _) if !free(e, &tris[tris.len() - 1]) => tris.reverse(),
        (None, Some(e)) if !free(e, &tris[0]) => tris.reverse(),
        _ => {}
    }
    let ok_last = spec.end_edge.is_none_or(|e| free(e, &tris[tris.len() - 1]));
    let ok_first = spec.second_end_edge.is_none_or(|e| free(e, &tris[0]));
    if !(ok_last && ok_first) {
        return Err(fail());
    }
    Ok(TriangleSeq::linear(tris))
}
