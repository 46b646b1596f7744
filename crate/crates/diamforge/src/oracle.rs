//! Exhaustive search for the longest good walk on a few vertices.
//!
//! Walks are grown one `(label, layout bit)` at a time from `{0,1,2}`,
//! `{1,2,3}`; a new label is only ever the smallest unused one. A branch is
//! dropped when even covering every remaining edge, two per triangle, could
//! not reach the best walk found so far.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::LabelsLayout;
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Edges are tracked in a `u128`.
pub const MAX_N: u32 = 16;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Node limit; `None` searches to completion.
    pub budget: Option<u64>,
    pub jobs: usize,
    pub prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: Some(DEFAULT_BUDGET), jobs: 1, prune: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: u32,
    pub best_diameter: u64,
    pub witness: LabelsLayout,
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

struct Shared {
    budget: Option<u64>,
    spent: AtomicU64,
    aborted: AtomicBool,
}

#[derive(Clone)]
struct Walk {
    labels: Vec<u8>,
    layout: Vec<u8>,
    carried: u8,
    prev: u8,
    last: u8,
    used: u8,
    covered: u128,
}

struct Worker<'a> {
    n: u8,
    total: u32,
    prune: bool,
    shared: &'a Shared,
    local: u64,
    nodes: u64,
    best: Option<(Vec<u8>, Vec<u8>)>,
}

fn bit(n: u8, u: u8, v: u8) -> u128 {
    let (u, v) = if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) };
    // index of {u,v} in the row-major upper triangle
    let idx = u * (2 * n as u32 - u - 1) / 2 + (v - u - 1);
    1u128 << idx
}

impl Worker<'_> {
    fn diameter(&self) -> usize {
        self.best.as_ref().map_or(0, |b| b.0.len() - 3)
    }

    fn offer(&mut self, w: &Walk) {
        let better = match &self.best {
            None => true,
            Some((l, y)) => w.labels.len() > l.len() || (w.labels.len() == l.len() && (&w.labels, &w.layout) < (l, y)),
        };
        if better {
            self.best = Some((w.labels.clone(), w.layout.clone()));
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.local += 1;
        if self.local == 4096 {
            let spent = self.shared.spent.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if self.shared.budget.is_some_and(|b| spent > b) {
                self.shared.aborted.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.aborted.load(Ordering::Relaxed)
    }

    fn children(&self, w: &Walk) -> Vec<Walk> {
        let mut out = Vec::new();
        for v in 0..(w.used + 1).min(self.n) {
            for y in [0u8, 1] {
                let keep = if y == 0 { w.prev } else { w.carried };
                if v == keep || v == w.last {
                    continue;
                }
                let fresh = bit(self.n, v, keep) | bit(self.n, v, w.last);
                if w.covered & fresh != 0 {
                    continue;
                }
                let mut c = w.clone();
                c.labels.push(v);
                c.layout.push(y);
                if y == 0 {
                    c.carried = w.prev;
                }
                c.prev = w.last;
                c.last = v;
                c.used = w.used.max(v + 1);
                c.covered |= fresh;
                out.push(c);
            }
        }
        out
    }

    fn dfs(&mut self, w: &Walk) {
        if !self.tick() {
            return;
        }
        self.offer(w);
        if self.prune {
            let left = self.total - w.covered.count_ones();
            if w.labels.len() - 3 + ((left / 2) as usize) < self.diameter() {
                return;
            }
        }
        for c in self.children(w) {
            self.dfs(&c);
        }
    }
}

fn root(n: u8) -> Walk {
    let covered = bit(n, 0, 1) | bit(n, 0, 2) | bit(n, 1, 2);
    Walk { labels: vec![0, 1, 2], layout: vec![], carried: 0, prev: 1, last: 2, used: 3, covered }
}

/// Search with the default configuration except for the budget.
pub fn search_max_diameter(n: u32, budget: Option<u64>) -> Result<SearchResult> {
    search_with(n, &SearchConfig { budget, ..SearchConfig::default() })
}

pub fn search_with(n: u32, cfg: &SearchConfig) -> Result<SearchResult> {
    if n < 3 {
        return Err(Error::TooSmall { n: n as u64, min: 3 });
    }
    if n > MAX_N {
        return Err(Error::TooLarge { n: n as u64, max: MAX_N as u64 });
    }
    let n8 = n as u8;
    let shared = Shared { budget: cfg.budget, spent: AtomicU64::new(0), aborted: AtomicBool::new(false) };
    let worker =
        || Worker { n: n8, total: n * (n - 1) / 2, prune: cfg.prune, shared: &shared, local: 0, nodes: 0, best: None };

    // Fix the second triangle as {1,2,3}; split the rest by the third.
    let mut head = worker();
    let start = root(n8);
    head.tick();
    head.offer(&start);
    let mut branches = Vec::new();
    if n > 3 {
        let second = head.children(&start).into_iter().find(|c| c.labels[3] == 3 && c.layout[0] == 0).unwrap();
        head.tick();
        head.offer(&second);
        branches = head.children(&second);
    }
    let run = |w: &Walk| {
        let mut wk = worker();
        wk.dfs(w);
        (wk.best, wk.nodes)
    };
    let results: Vec<_> = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        pool.install(|| branches.par_iter().map(run).collect())
    } else {
        branches.iter().map(run).collect()
    };

    let mut nodes = head.nodes;
    for (best, count) in results {
        nodes += count;
        if let Some((labels, layout)) = best {
            let w = Walk { labels, layout, ..start.clone() };
            head.offer(&w);
        }
    }
    let (labels, layout) = head.best.expect("root is always offered");
    Ok(SearchResult {
        n,
        best_diameter: (labels.len() - 3) as u64,
        witness: LabelsLayout { n, labels: labels.into_iter().map(u32::from).collect(), layout },
        exhaustive: !shared.aborted.load(Ordering::Relaxed),
        nodes_explored: nodes,
    })
}
