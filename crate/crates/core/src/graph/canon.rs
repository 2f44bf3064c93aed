//! Exact canonical labelling for small graphs.
//!
//! Individualisation-refinement: the vertex set is split into an ordered
//! equitable partition by iterated neighbour counting, then every vertex of
//! the first non-singleton cell is individualised in turn until the partition
//! is discrete. Each discrete partition is a labelling; the one giving the
//! largest adjacency code wins. Automorphisms discovered as equal leaves prune
//! sibling branches that lie in the same orbit of the pointwise stabiliser of
//! the current prefix.

use super::{graph6::encode_graph6, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exact canonicaliser.
pub const CANON_MAX_VERTICES: usize = 16;

const MAXN: usize = CANON_MAX_VERTICES;

#[derive(Clone, Copy)]
struct Partition {
    cells: [u16; MAXN],
    len: usize,
}

struct Search {
    n: usize,
    adj: [u16; MAXN],
    best: Option<(u128, [u8; MAXN])>,
    autos: Vec<[u8; MAXN]>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let mut adj = [0u16; MAXN];
        for (u, row) in adj.iter_mut().enumerate().take(g.n()) {
            *row = g.row(u)[0] as u16;
        }
        Search {
            n: g.n(),
            adj,
            best: None,
            autos: Vec::new(),
        }
    }

    /// Splits every cell by neighbour counts into the previous partition until
    /// nothing changes. New cells keep the old cell order, sorted by count key.
    fn refine(&self, p: &mut Partition) {
        loop {
            let mut next = Partition {
                cells: [0; MAXN],
                len: 0,
            };
            for c in 0..p.len {
                let cell = p.cells[c];
                if cell.count_ones() == 1 {
                    next.cells[next.len] = cell;
                    next.len += 1;
                    continue;
                }
                let mut keyed: [(u64, u8); MAXN] = [(0, 0); MAXN];
                let mut k = 0;
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let mut key = 0u64;
                    for (i, &other) in p.cells[..p.len].iter().enumerate() {
                        key |= ((self.adj[v] & other).count_ones() as u64) << (4 * (MAXN - 1 - i));
                    }
                    keyed[k] = (key, v as u8);
                    k += 1;
                }
                let keyed = &mut keyed[..k];
                keyed.sort_unstable();
                let mut cur = 0u16;
                let mut cur_key = keyed[0].0;
                for &(key, v) in keyed.iter() {
                    if key != cur_key {
                        next.cells[next.len] = cur;
                        next.len += 1;
                        cur = 0;
                        cur_key = key;
                    }
                    cur |= 1 << v;
                }
                next.cells[next.len] = cur;
                next.len += 1;
            }
            let changed = next.len != p.len;
            *p = next;
            if !changed {
                return;
            }
        }
    }

    fn leaf(&mut self, p: &Partition) {
        let mut order = [0u8; MAXN];
        for (i, cell) in p.cells[..p.len].iter().enumerate() {
            order[i] = cell.trailing_zeros() as u8;
        }
        let mut code = 0u128;
        for j in 1..self.n {
            let row = self.adj[order[j] as usize];
            for &oi in &order[..j] {
                code = (code << 1) | ((row >> oi) & 1) as u128;
            }
        }
        match self.best {
            None => self.best = Some((code, order)),
            Some((best, _)) if code > best => self.best = Some((code, order)),
            Some((best, best_order)) if code == best => {
                let mut gamma: [u8; MAXN] = std::array::from_fn(|i| i as u8);
                for i in 0..self.n {
                    gamma[order[i] as usize] = best_order[i];
                }
                self.autos.push(gamma);
            }
            _ => {}
        }
    }

    fn same_orbit(&self, v: u8, explored: &[u8], prefix: &[u8]) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut parent = [0u8; MAXN];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAXN], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&w| gamma[w as usize] != w) {
                continue;
            }
            for (x, &gx) in gamma.iter().enumerate().take(self.n) {
                let a = find(&mut parent, x as u8);
                let b = find(&mut parent, gx);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn search(&mut self, p: Partition, prefix: &mut Vec<u8>) {
        let Some(target) = (0..p.len).find(|&i| p.cells[i].count_ones() > 1) else {
            self.leaf(&p);
            return;
        };
        let cell = p.cells[target];
        let mut explored: Vec<u8> = Vec::new();
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            if self.same_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Partition {
                cells: [0; MAXN],
                len: p.len + 1,
            };
            child.cells[..target].copy_from_slice(&p.cells[..target]);
            child.cells[target] = 1 << v;
            child.cells[target + 1] = cell & !(1 << v);
            child.cells[target + 2..p.len + 1].copy_from_slice(&p.cells[target + 1..p.len]);
            self.refine(&mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }
}

fn run(g: &Graph) -> Result<(u128, [u8; MAXN])> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(Error::SizeLimit {
            n: g.n(),
            limit: CANON_MAX_VERTICES,
            what: "exact canonical form",
        });
    }
    if g.n() == 0 {
        return Ok((0, [0; MAXN]));
    }
    let mut s = Search::new(g);
    let mut p = Partition {
        cells: [0; MAXN],
        len: 1,
    };
    p.cells[0] = if g.n() == MAXN {
        u16::MAX
    } else {
        (1u16 << g.n()) - 1
    };
    s.refine(&mut p);
    s.search(p, &mut Vec::with_capacity(g.n()));
    Ok(s.best.expect("search reaches at least one leaf"))
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let (_, order) = run(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order[..g.n()].iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok(perm)
}

/// Packed upper triangle of the canonical relabelling, in graph6 bit order.
/// Two graphs on the same number of vertices are isomorphic iff codes match.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(run(g)?.0)
}

/// graph6 bytes of the canonical relabelling; equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let perm = canonical_labeling(g)?;
    let mut h = g.permuted(&perm);
    h.clear_labels();
    encode_graph6(&h)
}

/// Rebuilds the canonical graph on `n` vertices from its code.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let mut g = Graph::empty(n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = bits;
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if (code >> k) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn c4_relabelings_agree() {
        let base = canonical_form(&c4()).unwrap();
        let perms = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 0, 3, 1], [3, 2, 1, 0]];
        for p in perms {
            assert_eq!(canonical_form(&c4().permuted(&p)).unwrap(), base);
        }
    }

    #[test]
    fn c4_vs_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(canonical_form(&c4()).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn claw_vs_triangle_plus_isolated() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let tri = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_ne!(
            canonical_form(&claw).unwrap(),
            canonical_form(&tri).unwrap()
        );
    }

    #[test]
    fn code_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]);
        let code = canonical_code(&g).unwrap();
        let h = graph_from_code(6, code);
        assert_eq!(canonical_code(&h).unwrap(), code);
        assert_eq!(h.edge_count(), 5);
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in 1..=16 {
            let _ = canonical_code(&Graph::empty(n)).unwrap();
            let _ = canonical_code(&Graph::complete(n)).unwrap();
        }
        // Petersen
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        let code = canonical_code(&g).unwrap();
        let p = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_code(&g.permuted(&p)).unwrap(), code);
    }

    #[test]
    fn rejects_large() {
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }

    fn brute_max_code(g: &Graph) -> u128 {
        // independent oracle: best code over all n! relabellings
        fn rec(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u128) {
            let n = g.n();
            if order.len() == n {
                let mut code = 0u128;
                for j in 1..n {
                    for i in 0..j {
                        code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
                    }
                }
                *best = (*best).max(code);
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = 0;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn isomorphism_classes_match_brute_force_n5() {
        // canonical codes partition labelled graphs exactly like the brute-force maximum
        use std::collections::HashMap;
        let n = 5;
        let mut classes: HashMap<u128, u128> = HashMap::new();
        for mask in 0u32..(1 << 10) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask >> k & 1 == 1 {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            let brute = brute_max_code(&g);
            let code = canonical_code(&g).unwrap();
            if let Some(prev) = classes.insert(brute, code) {
                assert_eq!(prev, code);
            }
        }
        assert_eq!(classes.len(), 34);
        let distinct: std::collections::HashSet<_> = classes.values().collect();
        assert_eq!(distinct.len(), 34);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn invariant_under_relabeling(n in 1usize..=9, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p: f64 = rng.gen();
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
        }
    }
}
