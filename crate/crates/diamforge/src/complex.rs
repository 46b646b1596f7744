//! Vertices, edges, triangle walks and the `(labels, layout)` codec.
//!
//! A walk is given by `labels = [x0, x1, …]` and `layout = [y3, y4, …]`. The
//! first triangle is `{x0, x1, x2}`. Each later label `xi` replaces one vertex
//! of the current triangle. With `yi = 0` the oldest of the two newest labels
//! stays, so the next triangle is `{x(i-2), x(i-1), xi}`. With `yi = 1` the
//! "carried" vertex stays instead, giving `{xj, x(i-1), xi}`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Vertex = u32;

/// Unordered pair of distinct vertices, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Panics if `u == v`.
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        Edge::try_new(u, v).expect("edge endpoints must differ")
    }

    pub fn try_new(u: Vertex, v: Vertex) -> Option<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Some(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [u, v] = <[Vertex; 2]>::deserialize(d)?;
        Edge::try_new(u, v).ok_or_else(|| serde::de::Error::custom("loop edge"))
    }
}

/// A 3-set of vertices, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle([Vertex; 3]);

impl Triangle {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Option<Triangle> {
        let mut v = [a, b, c];
        v.sort_unstable();
        (v[0] != v[1] && v[1] != v[2]).then_some(Triangle(v))
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge { lo: a, hi: b }, Edge { lo: a, hi: c }, Edge { lo: b, hi: c }]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.contains(e.lo) && self.contains(e.hi)
    }

    /// Number of common vertices.
    pub fn shared(&self, other: &Triangle) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Build a triangle from a literal triple; panics on a repeated vertex.
pub fn tri(a: Vertex, b: Vertex, c: Vertex) -> Triangle {
    Triangle::new(a, b, c).unwrap_or_else(|| panic!("degenerate triangle {a},{b},{c}"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleSeq {
    pub triangles: Vec<Triangle>,
    pub circular: bool,
}

impl TriangleSeq {
    pub fn linear(triangles: Vec<Triangle>) -> TriangleSeq {
        TriangleSeq { triangles, circular: false }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn reversed(&self) -> TriangleSeq {
        let mut triangles = self.triangles.clone();
        triangles.reverse();
        TriangleSeq { triangles, circular: self.circular }
    }

    /// Largest vertex id plus one.
    pub fn vertex_bound(&self) -> u32 {
        self.triangles.iter().map(|t| t.0[2] + 1).max().unwrap_or(0)
    }
}

/// Compact encoding of a walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelsLayout {
    pub n: u32,
    pub labels: Vec<Vertex>,
    pub layout: Vec<u8>,
}

impl LabelsLayout {
    /// Schema checks: lengths, bits, label range.
    pub fn validate(&self) -> Result<()> {
        if self.labels.len() < 3 || self.layout.len() + 3 != self.labels.len() {
            return Err(Error::LengthMismatch { labels: self.labels.len(), layout: self.layout.len() });
        }
        if let Some((index, &value)) = self.layout.iter().enumerate().find(|(_, b)| **b > 1) {
            return Err(Error::BadBit { index, value });
        }
        if let Some((index, &label)) = self.labels.iter().enumerate().find(|(_, l)| **l >= self.n) {
            return Err(Error::LabelOutOfRange { index, label, n: self.n });
        }
        Ok(())
    }
}

/// Decode a pair into its triangle walk.
///
/// The walk is circular when the last two labels repeat the first two and
/// the last triangle shares an edge with the first.
pub fn expand_pair(pair: &LabelsLayout) -> Result<TriangleSeq> {
    let x = &pair.labels;
    if x.len() < 3 || pair.layout.len() + 3 != x.len() {
        return Err(Error::LengthMismatch { labels: x.len(), layout: pair.layout.len() });
    }
    let mut triangles = Vec::with_capacity(x.len() - 2);
    triangles.push(Triangle::new(x[0], x[1], x[2]).ok_or(Error::Degenerate { index: 0 })?);
    let (mut carried, mut prev, mut last) = (x[0], x[1], x[2]);
    for (i, &xi) in x.iter().enumerate().skip(3) {
        let keep = match pair.layout[i - 3] {
            0 => {
                let keep = prev;
                carried = prev;
                keep
            }
            1 => carried,
            value => return Err(Error::BadBit { index: i - 3, value }),
        };
        let t = Triangle::new(keep, last, xi).ok_or(Error::Degenerate { index: i - 2 })?;
        triangles.push(t);
        prev = last;
        last = xi;
    }
    let k = x.len();
    let circular = triangles.len() >= 3
        && x[k - 2] == x[0]
        && x[k - 1] == x[1]
        && triangles[0].shared(&triangles[triangles.len() - 1]) == 2;
    Ok(TriangleSeq { triangles, circular })
}

fn encode_from(order: [Vertex; 3], rest: &[Triangle]) -> Result<Option<(Vec<Vertex>, Vec<u8>)>> {
    let mut labels = order.to_vec();
    let mut layout = Vec::with_capacity(rest.len());
    let [mut carried, mut prev, mut last] = order;
    let mut cur = Triangle::new(carried, prev, last).ok_or(Error::Degenerate { index: 0 })?;
    for (i, next) in rest.iter().enumerate() {
        if cur.shared(next) != 2 {
            return Err(Error::NotAdjacent { index: i });
        }
        let dropped = cur.0.into_iter().find(|v| !next.contains(*v)).unwrap();
        let new = next.0.into_iter().find(|v| !cur.contains(*v)).unwrap();
        if dropped == carried {
            layout.push(0);
            carried = prev;
        } else if dropped == prev {
            layout.push(1);
        } else {
            return Ok(None);
        }
        prev = last;
        last = new;
        labels.push(new);
        cur = *next;
    }
    Ok(Some((labels, layout)))
}

fn first_orders(seq: &[Triangle]) -> Vec<[Vertex; 3]> {
    let [a, b, c] = seq[0].0;
    let mut orders = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
    if let Some(t1) = seq.get(1) {
        // prefer dropping the vertex the second triangle does not contain
        orders.sort_by_key(|o| t1.contains(o[0]));
    }
    orders
}

/// Encode a walk as a labels/layout pair.
///
/// A linear walk is read from whichever end has the lexicographically
/// smaller triangle. For a circular walk the first triangle is kept and an
/// encoding whose last two labels repeat the first two is preferred.
pub fn encode_triples(seq: &TriangleSeq) -> Result<LabelsLayout> {
    if seq.is_empty() {
        return Err(Error::Empty);
    }
    let mut tris = seq.triangles.clone();
    if !seq.circular && tris[tris.len() - 1] < tris[0] {
        tris.reverse();
    }
    let n = seq.vertex_bound();
    let mut fallback = None;
    for order in first_orders(&tris) {
        if let Some((labels, layout)) = encode_from(order, &tris[1..])? {
            let k = labels.len();
            if !seq.circular || (labels[k - 2] == labels[0] && labels[k - 1] == labels[1]) {
                return Ok(LabelsLayout { n, labels, layout });
            }
            fallback.get_or_insert(LabelsLayout { n, labels, layout });
        }
    }
    fallback.ok_or(Error::NotEncodable)
}

/// How many triangles contain each edge.
pub fn edge_multiplicity(seq: &TriangleSeq) -> BTreeMap<Edge, usize> {
    let mut m = BTreeMap::new();
    for t in &seq.triangles {
        for e in t.edges() {
            *m.entry(e).or_insert(0) += 1;
        }
    }
    m
}

pub fn covered_edges(seq: &TriangleSeq) -> BTreeSet<Edge> {
    seq.triangles.iter().flat_map(|t| t.edges()).collect()
}

/// Consecutive triangles share exactly two vertices and no edge lies in two
/// triangles that are not neighbours in the walk.
pub fn is_good(seq: &TriangleSeq) -> bool {
    let t = &seq.triangles;
    let len = t.len();
    if len == 0 {
        return false;
    }
    if t.windows(2).any(|w| w[0].shared(&w[1]) != 2) {
        return false;
    }
    if seq.circular && (len < 3 || t[0].shared(&t[len - 1]) != 2) {
        return false;
    }
    let mut seen: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, tr) in t.iter().enumerate() {
        for e in tr.edges() {
            seen.entry(e).or_default().push(i);
        }
    }
    seen.values().all(|ix| match ix.as_slice() {
        [_] => true,
        [i, j] => j - i == 1 || (seq.circular && *i == 0 && *j == len - 1),
        _ => false,
    })
}

fn bfs(adj: &[Vec<usize>], src: usize) -> (usize, usize, usize) {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut q = VecDeque::from([src]);
    dist[src] = 0;
    let (mut far, mut reached) = (src, 1);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                reached += 1;
                if dist[v] > dist[far] {
                    far = v;
                }
                q.push_back(v);
            }
        }
    }
    (far, dist[far], reached)
}

/// Diameter of the dual graph over the distinct facets of `seq`.
///
/// Trees (every good linear walk) use two sweeps and cycles use their
/// length. Anything else falls back to a search from every facet.
pub fn dual_diameter(seq: &TriangleSeq) -> Result<usize> {
    let facets: Vec<Triangle> = seq.triangles.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if facets.is_empty() {
        return Err(Error::Empty);
    }
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, t) in facets.iter().enumerate() {
        for e in t.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    for ix in by_edge.values() {
        for (a, &i) in ix.iter().enumerate() {
            for &j in &ix[a + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let (far, _, reached) = bfs(&adj, 0);
    if reached != facets.len() {
        return Err(Error::Disconnected);
    }
    let arcs: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if arcs + 1 == facets.len() {
        return Ok(bfs(&adj, far).1);
    }
    if arcs == facets.len() && adj.iter().all(|a| a.len() == 2) {
        return Ok(facets.len() / 2);
    }
    Ok((0..facets.len()).map(|s| bfs(&adj, s).1).max().unwrap_or(0))
}

/// Largest possible diameter of a 2-complex on `n` vertices:
/// `⌊C(n,2)/2 − 3/2⌋`, except 5 for `n = 6`.
pub fn hs_max_diameter(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n == 6 {
        return Ok(5);
    }
    Ok((n * (n - 1) / 2 - 3) / 2)
}

/// Verification report for a walk on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub good: bool,
    pub circular: bool,
    pub covered_edges: usize,
    pub diameter: Option<u64>,
    pub optimum: u64,
    pub matches_optimum: bool,
    pub uncovered_edges: Vec<Edge>,
}

/// Check `seq` as a complex on `n` vertices (`n >= 3`).
pub fn certify(seq: &TriangleSeq, n: u32) -> Result<Certificate> {
    let optimum = hs_max_diameter(n as u64)?;
    let good = is_good(seq);
    let covered = covered_edges(seq);
    let diameter = dual_diameter(seq).ok().map(|d| d as u64);
    let uncovered_edges =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge { lo: u, hi: v })).filter(|e| !covered.contains(e)).collect();
    Ok(Certificate {
        good,
        circular: seq.circular,
        covered_edges: covered.len(),
        diameter,
        optimum,
        matches_optimum: good && !seq.circular && diameter == Some(optimum),
        uncovered_edges,
    })
}
