//! Seeded random instance generators.

use crate::error::Result;
use crate::graph::{subdivide_edge, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generator for instance `index` of a sample seeded with `seed`. Instances
/// use disjoint streams, so each can be rebuilt without the others.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn fill(g: &mut Graph, rng: &mut impl Rng, p: f64) {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
}

/// `G(n, p)` with `n` uniform in `min_n..=max_n` and `p` uniform in `[0.05, 0.95]`.
pub fn random_gnp(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.05..0.95);
    let mut g = Graph::empty(n);
    fill(&mut g, rng, p);
    g
}

/// A random recursive spanning tree plus `G(n, p)` edges, relabelled by a
/// random permutation.
pub fn random_connected(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n.max(min_n));
    let p = rng.gen_range(0.1..0.7);
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    fill(&mut g, rng, p);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// A connected graph with minimum degree at least 3 on its base vertices,
/// with one to three edges subdivided so that an internal path exists.
pub fn random_with_internal_path(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Result<Graph> {
    let subdivisions = rng.gen_range(1..=3usize);
    let hi = max_n.saturating_sub(subdivisions).max(4);
    let lo = min_n.saturating_sub(subdivisions).clamp(4, hi);
    let mut g = random_connected(rng, lo, hi);
    let m = g.n();
    for u in 0..m {
        while g.degree(u) < 3 {
            let v = rng.gen_range(0..m);
            if v != u {
                g.add_edge(u, v);
            }
        }
    }
    for _ in 0..subdivisions {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let &(u, v) = edges.choose(rng).expect("connected graph has edges");
        g = subdivide_edge(&g, u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::internal_path_edges;

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a = random_gnp(&mut instance_rng(5, 3), 4, 12);
        let b = random_gnp(&mut instance_rng(5, 3), 4, 12);
        assert_eq!(
            crate::graph::to_graph6_string(&a),
            crate::graph::to_graph6_string(&b)
        );
        let c = random_gnp(&mut instance_rng(5, 4), 4, 12);
        let d = random_gnp(&mut instance_rng(6, 3), 4, 12);
        assert!(
            crate::graph::to_graph6_string(&a) != crate::graph::to_graph6_string(&c)
                || crate::graph::to_graph6_string(&a) != crate::graph::to_graph6_string(&d)
        );
    }

    #[test]
    fn generators_meet_their_promises() {
        for i in 0..200 {
            let mut rng = instance_rng(1, i);
            let g = random_connected(&mut rng, 3, 15);
            assert!(g.is_connected() && (3..=15).contains(&g.n()));
            let h = random_with_internal_path(&mut rng, 5, 20).unwrap();
            assert!(h.is_connected() && h.n() <= 20);
            assert!(!internal_path_edges(&h).is_empty());
        }
    }
}
