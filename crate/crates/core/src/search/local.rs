//! Hill climbing on the spectral radius.
//!
//! Moves are tried in a fixed order: Perron-guided rotations, then single
//! edge additions, then single edge swaps. The first move that keeps the
//! constraints and is certified to raise `λ` is taken.

use super::constraints::ConstraintSet;
use crate::error::{Error, Result};
use crate::format::{fmt_f64, join_vertices};
use crate::graph::{rotate_edges, to_graph6_string, Graph};
use crate::spectral::{compare_spectral_radii, exact_enclosure, perron, ExactRational, Proof};
use serde::Serialize;
use std::cmp::Ordering;

/// Entries closer than this are not trusted to satisfy `x_u ≥ x_v`.
pub const PERRON_MARGIN: f64 = 1e-9;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    Seed,
    Rotate {
        from: usize,
        to: usize,
        moved: Vec<usize>,
    },
    Add {
        u: usize,
        v: usize,
    },
    Swap {
        removed: (usize, usize),
        added: (usize, usize),
    },
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Move::Seed => write!(f, "seed"),
            Move::Rotate { from, to, moved } => {
                write!(f, "rotate v={from} u={to} w={}", join_vertices(moved, ","))
            }
            Move::Add { u, v } => write!(f, "add {u}-{v}"),
            Move::Swap { removed, added } => {
                write!(
                    f,
                    "swap -{}-{} +{}-{}",
                    removed.0, removed.1, added.0, added.1
                )
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub step: usize,
    #[serde(rename = "move")]
    pub mv: Move,
    pub graph6: String,
    pub lambda_lo: ExactRational,
    pub lambda_hi: ExactRational,
    /// How the increase over the previous step was certified.
    pub proof: Option<Proof>,
}

impl TraceStep {
    pub fn to_line(&self) -> String {
        format!(
            "step={} move=\"{}\" graph6={} lambda=[{}, {}]",
            self.step,
            self.mv,
            self.graph6,
            fmt_f64(self.lambda_lo.to_f64()),
            fmt_f64(self.lambda_hi.to_f64())
        )
    }
}

#[derive(Clone, Debug)]
pub struct LocalOptions {
    /// Maximum number of accepted moves.
    pub max_steps: usize,
    /// Per-length cycle search budget.
    pub budget: u64,
}

impl Default for LocalOptions {
    fn default() -> Self {
        LocalOptions {
            max_steps: 1000,
            budget: crate::cycles::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalResult {
    pub graph: Graph,
    pub trace: Vec<TraceStep>,
    /// Rotations attempted; each was checked to raise `λ`.
    pub rotations_checked: usize,
}

/// Candidate rotations `(v, u, W)` with `x_u ≥ x_v + margin`, highest gain
/// in Perron entry first.
fn rotation_moves(g: &Graph, x: &[f64]) -> Vec<(usize, usize, Vec<usize>)> {
    let n = g.n();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && x[u] >= x[v] + PERRON_MARGIN)
        .collect();
    pairs.sort_by(|a, b| {
        (x[b.0] - x[b.1])
            .total_cmp(&(x[a.0] - x[a.1]))
            .then(a.cmp(b))
    });
    pairs
        .into_iter()
        .filter_map(|(u, v)| {
            let w: Vec<usize> = g
                .neighbors(v)
                .filter(|&w| w != u && !g.has_edge(u, w))
                .collect();
            (!w.is_empty()).then_some((v, u, w))
        })
        .collect()
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect()
}

fn step_record(step: usize, mv: Move, g: &Graph, proof: Option<Proof>) -> Result<TraceStep> {
    let (lo, hi) = exact_enclosure(g)?;
    Ok(TraceStep {
        step,
        mv,
        graph6: to_graph6_string(g),
        lambda_lo: lo,
        lambda_hi: hi,
        proof,
    })
}

/// Proof that `h` is admissible and has larger `λ` than `g`.
fn improves(
    h: &Graph,
    g: &Graph,
    constraints: &ConstraintSet,
    budget: u64,
) -> Result<Option<Proof>> {
    if !constraints.admits(h, budget)? {
        return Ok(None);
    }
    let c = compare_spectral_radii(h, g)?;
    Ok((c.ordering == Ordering::Greater).then_some(c.proof))
}

/// Climbs from `seed` until no move is accepted or `max_steps` is reached.
///
/// Rotation moves are only proposed on connected graphs with `x_u ≥ x_v`;
/// every one of them is checked to raise `λ`, whether or not it is accepted,
/// and a failure aborts the search.
pub fn local_search(
    seed: &Graph,
    constraints: &ConstraintSet,
    opts: &LocalOptions,
) -> Result<LocalResult> {
    if let Some(why) = constraints.violation(seed, opts.budget)? {
        return Err(Error::ConstraintViolation(format!("seed fails: {why}")));
    }
    let mut g = seed.clone();
    g.clear_labels();
    let mut trace = vec![step_record(0, Move::Seed, &g, None)?];
    let mut rotations_checked = 0;
    'steps: for step in 1..=opts.max_steps {
        if g.is_connected() && g.n() > 1 {
            let x = perron(&g, 1e-12).vector;
            for (v, u, w) in rotation_moves(&g, &x) {
                let h = rotate_edges(&g, v, u, &w)?;
                rotations_checked += 1;
                let c = compare_spectral_radii(&h, &g)?;
                if c.ordering != Ordering::Greater {
                    return Err(Error::ConstraintViolation(format!(
                        "rotation v={v} u={u} on {} did not raise the spectral radius",
                        to_graph6_string(&g)
                    )));
                }
                if constraints.admits(&h, opts.budget)? {
                    g = h;
                    let mv = Move::Rotate {
                        from: v,
                        to: u,
                        moved: w,
                    };
                    trace.push(step_record(step, mv, &g, Some(c.proof))?);
                    continue 'steps;
                }
            }
        }
        let missing = non_edges(&g);
        for &(u, v) in &missing {
            let mut h = g.clone();
            h.add_edge(u, v);
            if let Some(proof) = improves(&h, &g, constraints, opts.budget)? {
                g = h;
                trace.push(step_record(step, Move::Add { u, v }, &g, Some(proof))?);
                continue 'steps;
            }
        }
        let present: Vec<(usize, usize)> = g.edges().collect();
        for &removed in &present {
            for &added in &missing {
                let mut h = g.clone();
                h.remove_edge(removed.0, removed.1);
                h.add_edge(added.0, added.1);
                if let Some(proof) = improves(&h, &g, constraints, opts.budget)? {
                    g = h;
                    trace.push(step_record(
                        step,
                        Move::Swap { removed, added },
                        &g,
                        Some(proof),
                    )?);
                    continue 'steps;
                }
            }
        }
        break;
    }
    Ok(LocalResult {
        graph: g,
        trace,
        rotations_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, PartChoice};

    #[test]
    fn climbs_from_c7() {
        let seed = build_family(&FamilySpec::Cycle { n: 7 }).unwrap();
        let c = ConstraintSet::new(7, &[5], true, false).unwrap();
        let r = local_search(&seed, &c, &LocalOptions::default()).unwrap();
        assert!(r.trace.len() > 1);
        assert!(c.admits(&r.graph, 1000).unwrap());
        assert!(!r.graph.is_bipartite());
        for w in r.trace.windows(2) {
            let a = crate::graph::decode_graph6(w[0].graph6.as_bytes()).unwrap();
            let b = crate::graph::decode_graph6(w[1].graph6.as_bytes()).unwrap();
            assert_eq!(
                compare_spectral_radii(&b, &a).unwrap().ordering,
                Ordering::Greater
            );
        }
    }

    #[test]
    fn rejects_bad_seed() {
        let c = ConstraintSet::new(5, &[3], true, false).unwrap();
        assert!(matches!(
            local_search(&Graph::complete(5), &c, &LocalOptions::default()),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn c3t_is_a_local_maximum_at_ten() {
        let seed = build_family(&FamilySpec::CycleAttachedTuran {
            n: 10,
            l: 1,
            part: PartChoice::Smaller,
        })
        .unwrap();
        let c = ConstraintSet::for_family(10, 1, 2).unwrap();
        let r = local_search(&seed, &c, &LocalOptions::default()).unwrap();
        assert_eq!(
            r.trace.len(),
            1,
            "{:?}",
            r.trace.last().map(|s| s.to_line())
        );
    }

    #[test]
    fn step_limit() {
        let seed = build_family(&FamilySpec::Cycle { n: 9 }).unwrap();
        let c = ConstraintSet::new(9, &[], true, false).unwrap();
        let r = local_search(
            &seed,
            &c,
            &LocalOptions {
                max_steps: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.trace.len(), 3);
    }
}
