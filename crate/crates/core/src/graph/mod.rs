//! Simple undirected graphs with bitset adjacency rows.
//!
//! Every vertex owns a row of `words` 64-bit words; bit `v` of row `u` is set
//! exactly when `uv` is an edge. Rows are kept symmetric and loop-free by every
//! mutating method, so the invariants hold for all values reachable through
//! the public API.

pub mod canon;
pub mod family;
pub mod graph6;
pub mod surgery;

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

pub use canon::{
    canonical_code, canonical_form, canonical_labeling, graph_from_code, CANON_MAX_VERTICES,
};
pub use family::{build_family, FamilySpec, PartChoice};
pub use graph6::{decode_graph6, encode_graph6, read_graph6_lines, to_graph6_string};
pub use surgery::{attach_cycle, attach_odd_cycle, blow_up, rotate_edges, subdivide_edge};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 512;

/// Annotation attached to a vertex of a constructed graph.
///
/// `part` names the bipartite side (or block) the vertex was built in, `walk`
/// its position along an attached cycle or path. The vertex where a cycle is
/// glued onto a bipartite graph carries both, with `walk == Some(0)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub part: Option<u16>,
    pub walk: Option<u16>,
}

impl VertexLabel {
    pub fn part(p: u16) -> Self {
        VertexLabel {
            part: Some(p),
            walk: None,
        }
    }

    pub fn walk(i: u16) -> Self {
        VertexLabel {
            part: None,
            walk: Some(i),
        }
    }
}

/// A proper 2-colouring. Each component's lowest vertex is coloured 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<VertexLabel>>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterator over the set bits of a bitset row.
pub struct BitIter<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub fn new(row: &'a [u64]) -> Self {
        BitIter {
            row,
            word: 0,
            cur: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`; fallible constructors check this first.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph with {n} vertices exceeds cap");
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// The adjacency bitset of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        if u == v {
            return;
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> BitIter<'_> {
        BitIter::new(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of neighbours of `u` inside `set` (a bitset of the same width).
    #[inline]
    pub fn degree_into(&self, u: usize, set: &[u64]) -> usize {
        self.row(u)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    /// Vertex tagged as the identification point of an attached cycle or path.
    pub fn identification_vertex(&self) -> Option<usize> {
        self.labels()?
            .iter()
            .position(|l| l.part.is_some() && l.walk == Some(0))
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v]).collect());
        }
        g
    }

    /// `G - S`: removes `removed` and returns the remaining graph together with
    /// the original index of each surviving vertex.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut drop = vec![false; self.n];
        for &v in removed {
            drop[v] = true;
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        (self.induced(&kept), kept)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![VertexLabel::default(); self.n];
            for (v, &p) in perm.iter().enumerate() {
                out[p] = labels[v];
            }
            g.labels = Some(out);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let (left, right): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| color[v] == 0);
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether every row is symmetric, loop-free and confined to `0..n`.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.neighbors(u) {
                if v >= self.n || !self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// Bitset with exactly the listed vertices set.
    pub fn vertex_mask(&self, vertices: &[usize]) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for &v in vertices {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    /// Number of edges with both ends in `vertices`.
    pub fn edges_within(&self, vertices: &[usize]) -> usize {
        let mask = self.vertex_mask(vertices);
        vertices
            .iter()
            .map(|&u| self.degree_into(u, &mask))
            .sum::<usize>()
            / 2
    }

    /// Number of edges between two disjoint vertex sets.
    pub fn edges_between(&self, a: &[usize], b: &[usize]) -> usize {
        let mask = self.vertex_mask(b);
        a.iter().map(|&u| self.degree_into(u, &mask)).sum()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn edges_and_degrees() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degrees(), vec![2; 5]);
        assert!(g.check_invariants());
        assert_eq!(g.edges().count(), 5);
    }

    #[test]
    fn loops_are_ignored() {
        let mut g = Graph::empty(3);
        g.add_edge(1, 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.check_invariants());
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::empty(200);
        g.add_edge(0, 199);
        g.add_edge(70, 130);
        assert!(g.has_edge(199, 0));
        assert_eq!(g.neighbors(130).collect::<Vec<_>>(), vec![70]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components().len(), 198);
    }

    #[test]
    fn c4_bipartition() {
        let parts = cycle(4).bipartition().unwrap();
        assert_eq!(parts.left, vec![0, 2]);
        assert_eq!(parts.right, vec![1, 3]);
    }

    #[test]
    fn c5_is_not_bipartite() {
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn induced_and_removal() {
        let g = Graph::complete(5);
        let (h, kept) = g.remove_vertices(&[1, 3]);
        assert_eq!(kept, vec![0, 2, 4]);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(g.edges_within(&[0, 1, 2]), 3);
        assert_eq!(g.edges_between(&[0, 1], &[2, 3, 4]), 6);
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let h = g.permuted(&[3, 2, 1, 0]);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
        assert_eq!(h.edge_count(), 3);
    }
}
