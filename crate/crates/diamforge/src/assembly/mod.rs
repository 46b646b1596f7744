//! Optimal walks for every `n >= 3`.
//!
//! `n = 4k+1` is a cut circular walk from [`genseq::gs_full`]. The other
//! classes start from a walk that misses a few residues and extend it from
//! its free end edges with [`attach_4k4`], [`attach_4k3`] or [`attach_4k6`].
//! Orders below the reach of those constructions come from a stored table.

mod gadgets;
mod table;

use std::collections::BTreeSet;

use crate::complex::{certify, expand_pair, tri, Certificate, Edge, LabelsLayout, Triangle, TriangleSeq, Vertex};
use crate::genseq::{self, circular_complex, cut_circular, find_cut};
use crate::{Error, Result};

pub use gadgets::{attach_4k3, attach_4k4, attach_4k6};

/// Triangles glued onto an existing walk at `anchor_edge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentPlan {
    pub anchor_edge: Edge,
    pub triangles: Vec<Triangle>,
}

impl AttachmentPlan {
    /// Edges covered by the plan, not counting the anchor.
    pub fn new_edges(&self) -> BTreeSet<Edge> {
        let mut e: BTreeSet<Edge> = self.triangles.iter().flat_map(|t| t.edges()).collect();
        e.remove(&self.anchor_edge);
        e
    }
}

fn check_path(path: &[Vertex], apexes: &[Vertex]) -> Result<()> {
    if path.len() < 2 {
        return Err(Error::TooSmall { n: path.len() as u64, min: 2 });
    }
    let mut seen = BTreeSet::new();
    for &v in apexes.iter().chain(path) {
        if !seen.insert(v) {
            return Err(Error::RepeatedVertex(v));
        }
    }
    Ok(())
}

pub(crate) fn rotation_tris(u: Vertex, path: &[Vertex]) -> Vec<Triangle> {
    path.windows(2).map(|w| tri(u, w[0], w[1])).collect()
}

pub(crate) fn zigzag_tris(u: Vertex, w: Vertex, path: &[Vertex]) -> Vec<Triangle> {
    let mut out = Vec::with_capacity(path.len() * 3 / 2);
    for i in 1..path.len() {
        let (x, y) = (path[i - 1], path[i]);
        match i % 4 {
            1 => out.extend([tri(x, y, u), tri(x, y, w)]),
            2 => out.push(tri(x, y, w)),
            3 => out.extend([tri(x, y, w), tri(x, y, u)]),
            _ => out.push(tri(x, y, u)),
        }
    }
    out
}

/// Fan `{u, v_i, v_(i+1)}` along the path.
pub fn rotation(center: Vertex, path: &[Vertex]) -> Result<AttachmentPlan> {
    check_path(path, &[center])?;
    Ok(AttachmentPlan { anchor_edge: Edge::new(center, path[0]), triangles: rotation_tris(center, path) })
}

/// Strip along the path, alternating apex `u` and `w` with period 4.
pub fn zigzag(u: Vertex, w: Vertex, path: &[Vertex]) -> Result<AttachmentPlan> {
    check_path(path, &[u, w])?;
    Ok(AttachmentPlan { anchor_edge: Edge::new(u, path[0]), triangles: zigzag_tris(u, w, path) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallTableEntry {
    pub n: u32,
    pub pair: LabelsLayout,
}

/// Stored optimal walk for `n`, if the table has one.
pub fn small_table(n: u32) -> Option<SmallTableEntry> {
    table::ROWS.iter().find(|r| r.0 == n).map(|&(n, labels, layout)| SmallTableEntry {
        n,
        pair: LabelsLayout { n, labels: labels.to_vec(), layout: layout.to_vec() },
    })
}

/// Orders with a stored walk.
pub fn table_orders() -> Vec<u32> {
    table::ROWS.iter().map(|r| r.0).collect()
}

/// Which construction [`construct_optimal`] uses for `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Table,
    Full { k: u32 },
    FourKPlus4 { k: u32 },
    FourKPlus3 { k: u32 },
    FourKPlus6 { k: u32 },
}

/// `None` only for `n < 3`.
pub fn method_for(n: u32) -> Option<Method> {
    let m = match n % 4 {
        1 if n >= 13 => Method::Full { k: (n - 1) / 4 },
        0 if n >= 20 => Method::FourKPlus4 { k: (n - 4) / 4 },
        3 if n >= 23 => Method::FourKPlus3 { k: (n - 3) / 4 },
        2 if n >= 34 => Method::FourKPlus6 { k: (n - 6) / 4 },
        _ if n >= 3 => Method::Table,
        _ => return None,
    };
    Some(m)
}

/// Build the walk for `n` without certifying it.
pub fn construct_walk(n: u32) -> Result<TriangleSeq> {
    let method = method_for(n).ok_or(Error::TooSmall { n: n as u64, min: 3 })?;
    let seq = match method {
        Method::Table => {
            let entry = small_table(n).expect("every order below the general range is tabulated");
            expand_pair(&entry.pair)?
        }
        Method::Full { k } => {
            let circ = circular_complex(&genseq::gs_full(k)?)?;
            cut_circular(&circ, &find_cut(&circ, None, None)?)?
        }
        Method::FourKPlus4 { k } => {
            let (gs, spec) = genseq::gs_missing_12(k)?;
            let mut walk = cut_circular(&circular_complex(&gs)?, &spec)?.triangles;
            walk.extend(attach_4k4(k)?.triangles);
            TriangleSeq::linear(walk)
        }
        Method::FourKPlus3 { k } => {
            let (gs, _) = genseq::gs_missing_12(k)?;
            let mut walk = cut_circular(&circular_complex(&gs)?, &genseq::cut_spec_0_13(k)?)?.triangles;
            walk.extend(attach_4k3(k)?.triangles);
            TriangleSeq::linear(walk)
        }
        Method::FourKPlus6 { k } => {
            let (gs, spec) = genseq::gs_missing_1248(k)?;
            let core = cut_circular(&circular_complex(&gs)?, &spec)?.triangles;
            let (plan_a, plan_b) = attach_4k6(k)?;
            let mut walk: Vec<Triangle> = plan_b.triangles.into_iter().rev().collect();
            walk.extend(core);
            walk.extend(plan_a.triangles);
            TriangleSeq::linear(walk)
        }
    };
    Ok(seq)
}

/// Optimal walk for `n` together with its certificate.
pub fn construct_optimal(n: u32) -> Result<(TriangleSeq, Certificate)> {
    let seq = construct_walk(n)?;
    let cert = certify(&seq, n)?;
    Ok((seq, cert))
}
