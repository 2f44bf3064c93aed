//! Budgeted backtracking for cycles and paths of a prescribed length.

use crate::graph::{words_for, Graph};
use serde::Serialize;
use std::collections::VecDeque;

/// Default node-expansion budget per length.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Outcome of a length-specific search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum CycleStatus {
    Present(Vec<usize>),
    Absent,
    Unknown,
}

impl CycleStatus {
    pub fn is_present(&self) -> bool {
        matches!(self, CycleStatus::Present(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            CycleStatus::Present(_) => "present",
            CycleStatus::Absent => "absent",
            CycleStatus::Unknown => "unknown",
        }
    }
}

/// Rotates a cycle to start at its smallest vertex and picks the direction
/// whose second vertex is smaller.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return vec![];
    }
    let start = (0..len).min_by_key(|&i| cycle[i]).expect("non-empty");
    let fwd: Vec<usize> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let bwd: Vec<usize> = (0..len).map(|i| cycle[(start + len - i) % len]).collect();
    fwd.min(bwd)
}

/// Whether `cycle` is a cycle of `g`: at least three distinct vertices with
/// consecutive (and closing) pairs adjacent.
pub fn is_valid_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
}

/// Whether `path` is a simple path of `g`.
pub fn is_valid_path(g: &Graph, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[inline]
fn test(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn flip(set: &mut [u64], v: usize) {
    set[v / 64] ^= 1 << (v % 64);
}

/// Shortest walk lengths of each parity from `s` inside `allowed`.
fn parity_distances(g: &Graph, s: usize, allowed: &[u64]) -> Vec<[u32; 2]> {
    let mut dist = vec![[u32::MAX; 2]; g.n()];
    dist[s][0] = 0;
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        let d = dist[u][p] + 1;
        for v in g.neighbors(u) {
            if test(allowed, v) && dist[v][1 - p] == u32::MAX {
                dist[v][1 - p] = d;
                queue.push_back((v, 1 - p));
            }
        }
    }
    dist
}

struct Walker<'a> {
    g: &'a Graph,
    target: usize,
    /// Number of vertices the finished path must have.
    len: usize,
    allowed: Vec<u64>,
    visited: Vec<u64>,
    dist: Vec<[u32; 2]>,
    path: Vec<usize>,
    budget: u64,
    used: u64,
    /// For cycles: `rank[path[1]] < rank[last]` removes mirrored duplicates.
    rank: Option<&'a [usize]>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Walker<'_> {
    fn extend(&mut self) -> Step {
        self.used += 1;
        if self.used > self.budget {
            return Step::OutOfBudget;
        }
        let last = *self.path.last().expect("path starts non-empty");
        let k = self.path.len();
        if k == self.len {
            let closes = self.g.has_edge(last, self.target);
            let ok = match self.rank {
                Some(rank) => closes && rank[self.path[1]] < rank[last],
                None => last == self.target,
            };
            return if ok { Step::Found } else { Step::Exhausted };
        }
        // edges still to walk from the next vertex to the target
        let remaining = match self.rank {
            Some(_) => self.len - k,
            None => self.len - k - 1,
        };
        let row = self.g.row(last);
        for (w, &bits) in row.iter().enumerate() {
            let mut cand = bits & self.allowed[w] & !self.visited[w];
            while cand != 0 {
                let v = w * 64 + cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if self.rank.is_none() && v == self.target && remaining > 0 {
                    continue;
                }
                let need = self.dist[v][remaining % 2];
                if need as usize > remaining {
                    continue;
                }
                flip(&mut self.visited, v);
                self.path.push(v);
                match self.extend() {
                    Step::Exhausted => {}
                    other => return other,
                }
                self.path.pop();
                flip(&mut self.visited, v);
            }
        }
        Step::Exhausted
    }
}

/// Vertices ordered by `(degree, index)`; `rank[v]` is the position of `v`.
fn degree_ranks(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    (order, rank)
}

/// Searches for a cycle of exactly `len` vertices.
///
/// Each cycle is sought from its lowest-ranked vertex, ranking by degree then
/// index, so only higher-ranked vertices are admitted. Branches are pruned
/// when no walk of the right length and parity can return to the start.
pub fn contains_cycle_of_length(g: &Graph, len: usize, budget: u64) -> CycleStatus {
    let n = g.n();
    if len < 3 || len > n {
        return CycleStatus::Absent;
    }
    if len % 2 == 1 && g.is_bipartite() {
        return CycleStatus::Absent;
    }
    let (order, rank) = degree_ranks(g);
    let words = words_for(n);
    let mut allowed = vec![0u64; words];
    for &v in &order {
        flip(&mut allowed, v);
    }
    let mut used = 0u64;
    for &s in &order {
        // allowed = vertices ranked at or above s
        if g.degree(s) < 2 {
            flip(&mut allowed, s);
            continue;
        }
        let dist = parity_distances(g, s, &allowed);
        let mut visited = vec![0u64; words];
        flip(&mut visited, s);
        let mut walker = Walker {
            g,
            target: s,
            len,
            allowed: allowed.clone(),
            visited,
            dist,
            path: vec![s],
            budget,
            used,
            rank: Some(&rank),
        };
        // s itself must not be re-entered before closing
        flip(&mut walker.allowed, s);
        let step = walker.extend();
        used = walker.used;
        match step {
            Step::Found => return CycleStatus::Present(canonical_cycle(&walker.path)),
            Step::OutOfBudget => return CycleStatus::Unknown,
            Step::Exhausted => {}
        }
        flip(&mut allowed, s);
    }
    CycleStatus::Absent
}

/// Searches for a path with exactly `edges` edges from `u` to `v`, avoiding
/// the vertices in `forbidden`.
pub fn find_path_of_length(
    g: &Graph,
    u: usize,
    v: usize,
    edges: usize,
    forbidden: &[usize],
    budget: u64,
) -> CycleStatus {
    if u == v || edges == 0 || forbidden.contains(&u) || forbidden.contains(&v) {
        return CycleStatus::Absent;
    }
    let words = words_for(g.n());
    let mut allowed = vec![u64::MAX; words];
    for x in g.n()..words * 64 {
        allowed[x / 64] &= !(1 << (x % 64));
    }
    for &f in forbidden {
        allowed[f / 64] &= !(1 << (f % 64));
    }
    // distances measured back from the target
    let dist = parity_distances(g, v, &allowed);
    let mut visited = vec![0u64; words];
    flip(&mut visited, u);
    let mut walker = Walker {
        g,
        target: v,
        len: edges + 1,
        allowed,
        visited,
        dist,
        path: vec![u],
        budget,
        used: 0,
        rank: None,
    };
    match walker.extend() {
        Step::Found => CycleStatus::Present(walker.path),
        Step::Exhausted => CycleStatus::Absent,
        Step::OutOfBudget => CycleStatus::Unknown,
    }
}
