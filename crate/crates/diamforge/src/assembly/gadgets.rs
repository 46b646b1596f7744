//! The attachment gadgets for `n = 4k+4`, `4k+3` and `4k+6`.
//!
//! Vertices `0..n'` are residues mod `n' = 4k+1`; `a, b, c, d, e` are
//! `n', n'+1, …`. Each gadget is a chain of rotations and zig-zags glued by
//! short hand-placed runs of triangles.

use super::{rotation_tris, zigzag_tris, AttachmentPlan};
use crate::complex::{tri, Edge, Triangle, Vertex};
use crate::{Error, Result};

struct Chain(Vec<Triangle>);

impl Chain {
    fn new() -> Chain {
        Chain(Vec::new())
    }
    fn rot(mut self, u: Vertex, path: &[Vertex]) -> Chain {
        self.0.extend(rotation_tris(u, path));
        self
    }
    fn zz(mut self, u: Vertex, w: Vertex, path: &[Vertex]) -> Chain {
        self.0.extend(zigzag_tris(u, w, path));
        self
    }
    fn tris(mut self, t: &[[Vertex; 3]]) -> Chain {
        self.0.extend(t.iter().map(|&[a, b, c]| tri(a, b, c)));
        self
    }
}

/// `from, from+step, …` while `<= to` (or `>= to` for negative steps).
fn run(from: u32, to: u32, step: i64) -> Vec<Vertex> {
    let mut v = Vec::new();
    let mut x = from as i64;
    while (step > 0 && x <= to as i64) || (step < 0 && x >= to as i64) {
        v.push(x as Vertex);
        x += step;
    }
    v
}

fn cat(parts: &[&[Vertex]]) -> Vec<Vertex> {
    parts.concat()
}

/// The plan must be a walk from its anchor that adds two fresh edges per
/// triangle, `expected` in total.
fn audit(
    what: &'static str,
    k: u32,
    anchor: Edge,
    triangles: Vec<Triangle>,
    expected: usize,
) -> Result<AttachmentPlan> {
    let plan = AttachmentPlan { anchor_edge: anchor, triangles };
    let walk_ok = plan.triangles.first().is_some_and(|t| t.contains_edge(anchor))
        && plan.triangles.windows(2).all(|w| w[0].shared(&w[1]) == 2);
    let edges = plan.new_edges();
    if !walk_ok || edges.len() != expected || 2 * plan.triangles.len() != expected {
        return Err(Error::Audit { what, k, expected, got: edges.len(), extra: Vec::new(), missing: Vec::new() });
    }
    Ok(plan)
}

/// Residues 1, 2 and every edge at `a`, `b`, `c`: `20k + 8` edges, starting
/// at `{0, 4k-2}`.
pub fn attach_4k4(k: u32) -> Result<AttachmentPlan> {
    if k < 4 {
        return Err(Error::KOutOfRange { k, min: 4 });
    }
    let q = 4 * k;
    let (a, b, c) = (q + 1, q + 2, q + 3);
    let t = Chain::new()
        .tris(&[[q - 2, 0, q - 1]])
        .rot(a, &cat(&[&[q - 1], &run(0, q - 8, 1), &[q - 6, q - 7, q - 5, q - 3, q - 4, c, q - 2, q, b]]))
        .tris(&[[b, q, 0]])
        .zz(b, c, &cat(&[&run(0, q - 8, 2), &run(q - 7, 1, -2)]))
        .tris(&[
            [1, c, q],
            [c, q, q - 1],
            [c, q - 3, q - 1],
            [q - 3, q - 1, b],
            [q - 3, b, q - 2],
            [b, q - 2, q - 4],
            [b, q - 4, q - 6],
            [q - 6, q - 4, q - 5],
            [q - 6, q - 5, c],
            [c, q - 5, b],
        ]);
    audit("4k+4", k, Edge::new(0, q - 2), t.0, (20 * k + 8) as usize)
}

/// Residues 1, 2, every edge at `a`, `b`, and `{0,13}` again: `16k + 6`
/// edges, starting at `{0, 7}`.
pub fn attach_4k3(k: u32) -> Result<AttachmentPlan> {
    if k < 5 {
        return Err(Error::KOutOfRange { k, min: 5 });
    }
    let q = 4 * k;
    let (a, b) = (q + 1, q + 2);
    let t = Chain::new()
        .rot(a, &cat(&[&[7, 0], &run(13, q - 1, 2), &[q], &run(q - 2, 8, -2), &[9, 11, b]]))
        .tris(&[
            [b, 10, 11],
            [b, 9, 10],
            [7, b, 9],
            [5, 7, b],
            [6, 5, 7],
            [6, 8, 7],
            [6, b, 8],
            [4, 6, b],
            [a, 4, 6],
            [2, a, 4],
            [2, 3, 4],
            [3, 4, 5],
            [3, a, 5],
            [1, 3, a],
            [b, 1, 3],
            [2, b, 1],
            [2, 0, 1],
            [0, 1, q],
        ])
        .rot(b, &cat(&[&[q, 0], &run(q - 1, 12, -1)]))
        .tris(&[[11, 12, 13]]);
    audit("4k+3", k, Edge::new(0, 7), t.0, (16 * k + 6) as usize)
}

/// Plan A starts at `{6,17}` and covers residues 1, 2, the edges from `a`,
/// `b` to the residues, `{a,b}` and `{0,17}`: `16k + 6` edges. Plan B starts
/// at `{0,6}` and covers residues 4, 8 and every edge at `c`, `d`, `e`:
/// `20k + 14` edges.
pub fn attach_4k6(k: u32) -> Result<(AttachmentPlan, AttachmentPlan)> {
    if k < 7 {
        return Err(Error::KOutOfRange { k, min: 7 });
    }
    let q = 4 * k;
    let (a, b, c, d, e) = (q + 1, q + 2, q + 3, q + 4, q + 5);
    let side_a = Chain::new()
        .rot(a, &cat(&[&[6, 17, 0], &run(q - 1, 19, -2), &[18], &run(20, q, 2), &[1, b, 13]]))
        .tris(&[[13, 15, b], [15, 14, b], [14, b, 16], [14, a, 16], [a, 16, 15], [16, 15, 17], [16, 17, 18]])
        .rot(b, &cat(&[&[18, 17], &run(19, q, 1), &[0, 2]]))
        .tris(&[
            [0, 2, 1],
            [2, 1, 3],
            [2, 3, a],
            [2, 4, a],
            [4, a, 5],
            [4, 3, 5],
            [4, b, 3],
            [6, 4, b],
            [6, 8, b],
            [6, 7, 8],
            [5, 6, 7],
            [5, b, 7],
            [b, 9, 7],
            [9, 7, a],
            [9, 11, a],
            [9, 10, 11],
            [8, 9, 10],
            [8, a, 10],
            [a, 12, 10],
            [12, 10, b],
            [12, 11, b],
            [12, 13, 11],
            [14, 12, 13],
        ]);
    let plan_a = audit("4k+6 (a, b)", k, Edge::new(6, 17), side_a.0, (16 * k + 6) as usize)?;

    let side_b = if k.is_multiple_of(2) {
        let around_e = cat(&[
            &[q - 11, q - 3],
            &run(4, q - 4, 8),
            &run(3, q - 5, 8),
            &run(2, q - 6, 8),
            &run(1, q - 15, 8),
            &run(q - 19, 5, -8),
            &run(q - 2, 6, -8),
            &run(q - 1, 7, -8),
            &run(q, 8, -8),
            &[0, q - 7],
        ]);
        Chain::new()
            .tris(&[[0, 6, c]])
            .zz(c, d, &cat(&[&run(0, q, 4), &run(3, q - 1, 4), &[2]]))
            .tris(&[[2, d, 6], [d, 6, 10]])
            .zz(d, c, &cat(&[&run(10, q - 2, 4), &run(1, q - 19, 4)]))
            .tris(&[[q - 19, c, q - 11], [c, q - 11, q - 3]])
            .rot(e, &around_e)
            .tris(&[
                [0, q - 7, q - 3],
                [q - 7, q - 3, d],
                [q - 7, d, q - 11],
                [q - 7, q - 11, q - 15],
                [q - 7, q - 15, c],
                [q - 15, c, d],
                [c, d, a],
                [c, a, e],
                [c, e, b],
                [e, b, d],
            ])
    } else {
        let around_e =
            cat(&[&[q - 3], &run(4, q, 8), &run(7, q - 5, 8), &[2, 6], &run(q - 1, 3, -8), &run(q - 4, 8, -8), &[0]]);
        Chain::new()
            .tris(&[[0, 6, c], [0, c, 4]])
            .zz(c, d, &cat(&[&run(4, q, 4), &run(3, q - 1, 4), &[2, 10]]))
            .tris(&[
                [10, c, e],
                [c, e, b],
                [c, b, d],
                [c, d, a],
                [d, a, e],
                [d, e, 14],
                [d, 14, 6],
                [14, 6, 10],
                [14, 10, 18],
            ])
            .rot(c, &cat(&[&[18, 14], &run(22, q - 2, 4), &run(1, q - 3, 4)]))
            .tris(&[[q - 7, q - 3, 0], [q - 7, 0, d]])
            .zz(d, e, &cat(&[&run(q - 7, 5, -8), &run(q - 2, 18, -8), &run(22, q - 6, 8), &run(1, q - 3, 8)]))
            .rot(e, &around_e)
    };
    let plan_b = audit("4k+6 (c, d, e)", k, Edge::new(0, 6), side_b.0, (20 * k + 14) as usize)?;
    Ok((plan_a, plan_b))
}
