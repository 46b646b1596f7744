//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use diamforge::complex::{tri, Edge, Triangle, TriangleSeq, Vertex};

/// Grow a good linear walk on `n` vertices from `{0,1,2}`. Each step lists
/// the extensions that add two uncovered edges and takes `choice % count`;
/// the walk stops when `choices` runs out or nothing fits.
pub fn random_good_walk(n: u32, choices: &[u32]) -> TriangleSeq {
    let mut tris = vec![tri(0, 1, 2)];
    let mut covered: BTreeSet<Edge> = tris[0].edges().into_iter().collect();
    let (mut carried, mut prev, mut last) = (0, 1, 2);
    for &c in choices {
        let mut options = Vec::new();
        for v in 0..n {
            for y in [0u8, 1] {
                let keep = if y == 0 { prev } else { carried };
                if v == keep || v == last {
                    continue;
                }
                if covered.contains(&Edge::new(v, keep)) || covered.contains(&Edge::new(v, last)) {
                    continue;
                }
                options.push((v, y, keep));
            }
        }
        if options.is_empty() {
            break;
        }
        let (v, y, keep) = options[c as usize % options.len()];
        covered.insert(Edge::new(v, keep));
        covered.insert(Edge::new(v, last));
        tris.push(tri(keep, last, v));
        if y == 0 {
            carried = prev;
        }
        prev = last;
        last = v;
    }
    TriangleSeq::linear(tris)
}

/// `{i, i + r}` for every `i` in `Z/m`.
pub fn residue_class(m: u32, r: u32) -> impl Iterator<Item = Edge> {
    (0..m).map(move |i| Edge::new(i, (i + r) % m))
}

/// Every edge from `x` to `0..m`.
pub fn star(m: u32, x: Vertex) -> impl Iterator<Item = Edge> {
    (0..m).map(move |i| Edge::new(i, x))
}

/// The classes each attachment plan must cover, for `m = 4k + 1` and extra
/// vertices `a = m, b = m + 1, …`.
pub fn expected_classes(kind: &str, k: u32) -> BTreeSet<Edge> {
    let m = 4 * k + 1;
    let (a, b, c, d, e) = (m, m + 1, m + 2, m + 3, m + 4);
    let mut s: BTreeSet<Edge> = BTreeSet::new();
    match kind {
        "4k+4" => {
            s.extend(residue_class(m, 1).chain(residue_class(m, 2)));
            s.extend(star(m, a).chain(star(m, b)).chain(star(m, c)));
            s.extend([Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]);
        }
        "4k+3" | "4k+6a" => {
            s.extend(residue_class(m, 1).chain(residue_class(m, 2)));
            s.extend(star(m, a).chain(star(m, b)));
            s.insert(Edge::new(a, b));
            s.insert(if kind == "4k+3" { Edge::new(0, 13) } else { Edge::new(0, 17) });
        }
        "4k+6b" => {
            s.extend(residue_class(m, 4).chain(residue_class(m, 8)));
            s.extend(star(m, c).chain(star(m, d)).chain(star(m, e)));
            s.extend([Edge::new(c, d), Edge::new(d, e), Edge::new(c, e)]);
            for x in [a, b] {
                s.extend([c, d, e].map(|y| Edge::new(x, y)));
            }
        }
        _ => panic!("unknown plan {kind}"),
    }
    s
}

pub fn same_walk(a: &[Triangle], b: &[Triangle]) -> bool {
    a == b || a.iter().eq(b.iter().rev())
}
