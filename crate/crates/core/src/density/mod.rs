//! Maximum average degree, degree peeling, cut-vertex reduction and
//! closed-form edge thresholds.

mod flow;

use crate::cycles::cut_vertices;
use crate::error::{Error, Result};
use crate::format::join_vertices;
use crate::graph::Graph;
use crate::spectral::ExactRational;
use flow::{FlowNetwork, INF};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// `mad` together with a vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityWitness {
    pub mad: ExactRational,
    pub subset: Vec<usize>,
}

impl fmt::Display for DensityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mad={} subset={}",
            self.mad,
            join_vertices(&self.subset, ",")
        )
    }
}

/// Solves `max_S q·e(S) - p·|S|` by a minimum cut and returns the optimum
/// with the largest optimal `S`.
fn densest_cut(g: &Graph, edges: &[(usize, usize)], p: i64, q: i64) -> (i64, Vec<usize>) {
    let n = g.n();
    let m = edges.len();
    let (s, t) = (m + n, m + n + 1);
    let mut net = FlowNetwork::new(m + n + 2);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(s, i, q);
        net.add_arc(i, m + u, INF);
        net.add_arc(i, m + v, INF);
    }
    for v in 0..n {
        net.add_arc(m + v, t, p);
    }
    let cut = net.max_flow(s, t);
    let side = net.not_reaching(t);
    let subset = (0..n).filter(|&v| side[m + v]).collect();
    (q * m as i64 - cut, subset)
}

/// Exact maximum average degree `max_S 2e(S)/|S|`.
///
/// Dinkelbach iteration on the density: each min-cut either certifies that
/// no set beats the current density or returns a strictly denser set, so the
/// loop ends at the optimum after finitely many steps.
pub fn mad(g: &Graph) -> Result<DensityWitness> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (mut p, mut q) = (edges.len() as i64, g.n() as i64);
    loop {
        let (gain, subset) = densest_cut(g, &edges, p, q);
        let e = g.edges_within(&subset) as i64;
        let size = subset.len() as i64;
        if gain == 0 {
            debug_assert_eq!(e * q, p * size);
            return Ok(DensityWitness {
                mad: ExactRational::new(2 * p, q),
                subset,
            });
        }
        debug_assert!(e * q > p * size);
        p = e;
        q = size;
    }
}

/// One deletion of the peeling process.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub vertex: usize,
    pub degree: usize,
}

/// Surviving subgraph and the vertices deleted on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelResult {
    #[serde(skip)]
    pub graph: Graph,
    /// Original indices of the vertices of `graph`.
    pub kept: Vec<usize>,
    pub log: Vec<PeelStep>,
}

impl PeelResult {
    /// Sum of degrees at deletion time.
    pub fn degree_sum(&self) -> usize {
        self.log.iter().map(|s| s.degree).sum()
    }

    pub fn to_lines(&self) -> String {
        let mut out = format!("kept={} deleted={}\n", self.kept.len(), self.log.len());
        for s in &self.log {
            out.push_str(&format!("delete v={} d={}\n", s.vertex, s.degree));
        }
        out
    }
}

/// Repeatedly deletes the lowest-index vertex of degree below `threshold`.
pub fn peel_to_min_degree(g: &Graph, threshold: f64) -> Result<PeelResult> {
    if !(threshold >= 0.0 && threshold.is_finite()) {
        return Err(Error::ParameterOutOfRange(format!(
            "peel threshold must be a finite non-negative number, got {threshold}"
        )));
    }
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut log = Vec::new();
    while let Some(v) = (0..n).find(|&v| alive[v] && (degree[v] as f64) < threshold) {
        alive[v] = false;
        log.push(PeelStep {
            vertex: v,
            degree: degree[v],
        });
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Ok(PeelResult {
        graph: g.induced(&kept),
        kept,
        log,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    #[serde(skip)]
    pub graph: Graph,
    pub kept: Vec<usize>,
    /// Deleted cut vertices in deletion order, as original indices.
    pub deleted: Vec<usize>,
}

/// Deletes the smallest-index cut vertex until none remains.
pub fn biconnected_reduction(g: &Graph) -> ReductionResult {
    let mut kept: Vec<usize> = (0..g.n()).collect();
    let mut current = g.clone();
    let mut deleted = Vec::new();
    while let Some(&c) = cut_vertices(&current).first() {
        deleted.push(kept[c]);
        let (next, rest) = current.remove_vertices(&[c]);
        kept = rest.into_iter().map(|i| kept[i]).collect();
        current = next;
    }
    ReductionResult {
        graph: current,
        kept,
        deleted,
    }
}

/// Which way the edge count must compare with a threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    AtMost,
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub threshold: ExactRational,
    pub side: Side,
    pub holds: bool,
    pub tight: bool,
}

impl BoundCheck {
    fn new(name: &'static str, e: usize, threshold: ExactRational, side: Side) -> Self {
        let ord = ExactRational::from_integer(e as i64).cmp(&threshold);
        let holds = match side {
            Side::AtMost => ord != Ordering::Greater,
            Side::AtLeast => ord != Ordering::Less,
        };
        BoundCheck {
            name,
            threshold,
            side,
            holds,
            tight: ord == Ordering::Equal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBounds {
    pub n: usize,
    pub e: usize,
    pub k: usize,
    pub checks: Vec<BoundCheck>,
}

impl EdgeBounds {
    pub fn get(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_lines(&self) -> String {
        let mut out = format!("n={} e={} k={}\n", self.n, self.e, self.k);
        for c in &self.checks {
            let rel = match c.side {
                Side::AtMost => "<=",
                Side::AtLeast => ">=",
            };
            out.push_str(&format!(
                "{} e{}{} holds={} tight={}\n",
                c.name, rel, c.threshold, c.holds, c.tight
            ));
        }
        out
    }
}

/// Mantel, the non-bipartite triangle-free bound, the path-replacement
/// threshold `⌊(n-2k+1)²/4⌋ + 2k - 1` and the lower bound `n²/4 - kn + k`.
pub fn edge_bound_checks(g: &Graph, k: usize) -> Result<EdgeBounds> {
    if k == 0 {
        return Err(Error::ParameterOutOfRange("k must be at least 1".into()));
    }
    let n = g.n() as i64;
    let e = g.edge_count();
    let ki = k as i64;
    let floor_quarter = |x: i64| ExactRational::from_integer(x * x / 4);
    let path = n - 2 * ki + 1;
    let checks = vec![
        BoundCheck::new("mantel", e, floor_quarter(n), Side::AtMost),
        BoundCheck::new(
            "nonbipartite",
            e,
            floor_quarter(n - 1) + ExactRational::from_integer(1),
            Side::AtMost,
        ),
        BoundCheck::new(
            "path_replacement",
            e,
            floor_quarter(path) + ExactRational::from_integer(2 * ki - 1),
            Side::AtMost,
        ),
        BoundCheck::new(
            "edge_lower",
            e,
            ExactRational::new(n * n - 4 * ki * n + 4 * ki, 4),
            Side::AtLeast,
        ),
    ];
    Ok(EdgeBounds {
        n: g.n(),
        e,
        k,
        checks,
    })
}

/// `max_S 2e(S)/|S|` by enumerating every non-empty subset; `n ≤ 20`.
pub fn mad_brute_force(g: &Graph) -> ExactRational {
    let n = g.n();
    assert!(n <= 20, "subset enumeration is limited to 20 vertices");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = ExactRational::from_integer(0);
    for mask in 1u32..(1 << n) {
        let e = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let r = ExactRational::new(2 * e as i64, mask.count_ones() as i64);
        if r > best {
            best = r;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        build_family(&FamilySpec::Cycle { n }).unwrap()
    }

    fn k4_pendant() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn mad_examples() {
        let w = mad(&cycle(5)).unwrap();
        assert_eq!(w.mad, ExactRational::from_integer(2));
        assert_eq!(w.subset, vec![0, 1, 2, 3, 4]);
        assert_eq!(
            mad(&Graph::complete(4)).unwrap().mad,
            ExactRational::from_integer(3)
        );
        let w = mad(&k4_pendant()).unwrap();
        assert_eq!(w.mad, ExactRational::from_integer(3));
        assert_eq!(w.subset, vec![0, 1, 2, 3]);
        assert_eq!(w.to_string(), "mad=3 subset=0,1,2,3");
        assert_eq!(mad(&Graph::empty(3)), Err(Error::EmptyGraph));
    }

    #[test]
    fn mad_fractional() {
        // K4 minus an edge: 5 edges on 4 vertices
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(mad(&g).unwrap().mad, ExactRational::new(5, 2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn mad_matches_subset_enumeration(n in 1usize..11, bits in proptest::collection::vec(any::<bool>(), 55)) {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] { g.add_edge(u, v); }
                    i += 1;
                }
            }
            prop_assume!(g.edge_count() > 0);
            let w = mad(&g).unwrap();
            prop_assert_eq!(&w.mad, &mad_brute_force(&g));
            let attained = ExactRational::new(2 * g.edges_within(&w.subset) as i64, w.subset.len() as i64);
            prop_assert_eq!(attained, w.mad);
        }
    }

    #[test]
    fn peel_examples() {
        let r = peel_to_min_degree(&cycle(5), 2.0).unwrap();
        assert_eq!(r.graph.n(), 5);
        assert!(r.log.is_empty());
        let p4 = build_family(&FamilySpec::Path { n: 4 }).unwrap();
        let r = peel_to_min_degree(&p4, 2.0).unwrap();
        assert_eq!(r.graph.n(), 0);
        assert_eq!(r.log.len(), 4);
        let r = peel_to_min_degree(&k4_pendant(), 3.0).unwrap();
        assert_eq!(r.kept, vec![0, 1, 2, 3]);
        assert_eq!(
            r.log,
            vec![PeelStep {
                vertex: 4,
                degree: 1
            }]
        );
        assert!(peel_to_min_degree(&p4, -1.0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn peel_replays_and_is_maximal(n in 1usize..14, bits in proptest::collection::vec(any::<bool>(), 91), th in 0.0f64..6.0) {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] { g.add_edge(u, v); }
                    i += 1;
                }
            }
            let r = peel_to_min_degree(&g, th).unwrap();
            prop_assert!(r.graph.degrees().iter().all(|&d| d as f64 >= th));
            // replay: each deleted vertex was below the threshold at its turn
            let mut alive = vec![true; n];
            for s in &r.log {
                let d = g.neighbors(s.vertex).filter(|&w| alive[w]).count();
                prop_assert_eq!(d, s.degree);
                prop_assert!((d as f64) < th);
                alive[s.vertex] = false;
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let r = biconnected_reduction(&bowtie);
        assert_eq!(r.deleted, vec![2]);
        assert_eq!(r.graph.edge_count(), 2);
        assert_eq!(r.graph.components().len(), 2);
        let r = biconnected_reduction(&cycle(6));
        assert!(r.deleted.is_empty());
        let p3 = build_family(&FamilySpec::Path { n: 3 }).unwrap();
        let r = biconnected_reduction(&p3);
        assert_eq!(r.deleted, vec![1]);
        assert_eq!((r.graph.n(), r.graph.edge_count()), (2, 0));
    }

    #[test]
    fn reduction_leaves_no_cut_vertex() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..16);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.25) {
                        g.add_edge(u, v);
                    }
                }
            }
            let r = biconnected_reduction(&g);
            assert!(cut_vertices(&r.graph).is_empty());
            assert_eq!(r.kept.len() + r.deleted.len(), n);
        }
    }

    #[test]
    fn edge_bound_examples() {
        let t6 = build_family(&FamilySpec::BipartiteTuran { n: 6 }).unwrap();
        let b = edge_bound_checks(&t6, 1).unwrap();
        let mantel = b.get("mantel").unwrap();
        assert!(mantel.holds && mantel.tight);

        let c5 = cycle(5);
        let blown = crate::graph::blow_up(&c5, &[2; 5]).unwrap();
        let b = edge_bound_checks(&blown, 2).unwrap();
        assert_eq!(b.e, 20);
        assert_eq!(
            b.get("nonbipartite").unwrap().threshold,
            ExactRational::from_integer(21)
        );

        let c3t = build_family(&FamilySpec::CycleAttachedTuran {
            n: 10,
            l: 1,
            part: crate::graph::PartChoice::Smaller,
        })
        .unwrap();
        let b = edge_bound_checks(&c3t, 2).unwrap();
        assert_eq!(b.e, 19);
        let lower = b.get("edge_lower").unwrap();
        assert_eq!(lower.threshold, ExactRational::from_integer(7));
        assert!(lower.holds);
        assert!(edge_bound_checks(&c3t, 0).is_err());
    }

    #[test]
    fn path_replaced_turan_meets_its_threshold() {
        for n in 9..20 {
            for k in 1..4 {
                let g = build_family(&FamilySpec::PathReplacedTuran { n, k }).unwrap();
                let b = edge_bound_checks(&g, k).unwrap();
                assert!(b.get("path_replacement").unwrap().tight, "n={n} k={k}");
            }
        }
    }
}
