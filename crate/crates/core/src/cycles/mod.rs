//! Cycle structure: girth and odd girth by BFS, per-length cycle search,
//! cycle spectra, forbidden-family checks and articulation points.

pub mod articulation;
pub mod search;

pub use articulation::cut_vertices;
pub use search::{
    canonical_cycle, contains_cycle_of_length, find_path_of_length, is_valid_cycle, is_valid_path,
    CycleStatus, DEFAULT_BUDGET,
};

use crate::error::{Error, Result};
use crate::format::join_vertices;
use crate::graph::{to_graph6_string, Graph};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt::Write as _;

/// BFS parents and depths from `s`.
fn bfs_tree(g: &Graph, s: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (dist, parent)
}

fn tree_path(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut p = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        p.push(v);
    }
    p
}

/// A shortest odd cycle, or `None` exactly when `g` is bipartite.
///
/// From each root, an edge joining two vertices on the same BFS layer closes
/// an odd walk through the root. At the globally shortest such walk the two
/// tree paths are disjoint, so the walk is a cycle.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for s in 0..g.n() {
        let (dist, _) = bfs_tree(g, s);
        for (u, v) in g.edges() {
            if dist[u] != usize::MAX && dist[u] == dist[v] {
                let len = 2 * dist[u] + 1;
                if best.is_none_or(|b| len < b.0) {
                    best = Some((len, s, u, v));
                }
            }
        }
        if best.is_some_and(|b| b.0 == 3) {
            break;
        }
    }
    let (_, s, u, v) = best?;
    let (_, parent) = bfs_tree(g, s);
    let mut cycle = tree_path(&parent, u);
    cycle.reverse();
    let back = tree_path(&parent, v);
    cycle.extend(back[..back.len() - 1].iter());
    debug_assert!(is_valid_cycle(g, &cycle));
    Some(canonical_cycle(&cycle))
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.n() {
        let (dist, parent) = bfs_tree(g, s);
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || parent[u] == v || parent[v] == u {
                continue;
            }
            let len = dist[u] + dist[v] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    best
}

pub fn odd_girth(g: &Graph) -> Option<usize> {
    shortest_odd_cycle(g).map(|c| c.len())
}

/// A longest-cycle statistic: `value` is exact when every longer length was
/// ruled out, otherwise a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LengthBound {
    pub value: Option<usize>,
    pub exact: bool,
}

impl std::fmt::Display for LengthBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let op = if self.exact { "=" } else { ">=" };
        match self.value {
            Some(v) => write!(f, "{op}{v}"),
            None if self.exact => write!(f, "=none"),
            None => write!(f, ">=none"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub n: usize,
    /// Entry `i` describes length `i + 3`.
    pub presence: Vec<CycleStatus>,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    pub circumference: LengthBound,
    pub longest_even: LengthBound,
    pub longest_odd: LengthBound,
}

impl CycleSpectrum {
    pub fn status(&self, len: usize) -> &CycleStatus {
        &self.presence[len - 3]
    }

    pub fn present_lengths(&self) -> Vec<usize> {
        (3..=self.n)
            .filter(|&l| self.status(l).is_present())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        !self.presence.contains(&CycleStatus::Unknown)
    }

    /// One line per length: `L=7 status=present witness=0-3-5-...`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
        writeln!(
            out,
            "g={} og={} c{} ec{} oc{}",
            opt(self.girth),
            opt(self.odd_girth),
            self.circumference,
            self.longest_even,
            self.longest_odd
        )
        .unwrap();
        for (i, s) in self.presence.iter().enumerate() {
            match s {
                CycleStatus::Present(w) => writeln!(
                    out,
                    "L={} status=present witness={}",
                    i + 3,
                    join_vertices(w, "-")
                )
                .unwrap(),
                other => writeln!(out, "L={} status={}", i + 3, other.label()).unwrap(),
            }
        }
        out
    }
}

fn longest(presence: &[CycleStatus], filter: impl Fn(usize) -> bool) -> LengthBound {
    let mut value = None;
    let mut exact = true;
    for (i, s) in presence.iter().enumerate().rev() {
        let len = i + 3;
        if !filter(len) {
            continue;
        }
        match s {
            CycleStatus::Present(_) => {
                value = Some(len);
                break;
            }
            CycleStatus::Unknown => exact = false,
            CycleStatus::Absent => {}
        }
    }
    LengthBound { value, exact }
}

/// Per-length search for every length `3..=n`, in parallel.
pub fn cycle_spectrum(g: &Graph, budget: u64) -> CycleSpectrum {
    let n = g.n();
    let odd = shortest_odd_cycle(g);
    let og = odd.as_ref().map(|c| c.len());
    let presence: Vec<CycleStatus> = (3..=n.max(2))
        .into_par_iter()
        .map(|len| match (&odd, og) {
            (Some(c), Some(o)) if len == o => CycleStatus::Present(c.clone()),
            (_, Some(o)) if len % 2 == 1 && len < o => CycleStatus::Absent,
            (None, _) if len % 2 == 1 => CycleStatus::Absent,
            _ => contains_cycle_of_length(g, len, budget),
        })
        .collect();
    CycleSpectrum {
        n,
        girth: girth(g),
        odd_girth: og,
        circumference: longest(&presence, |_| true),
        longest_even: longest(&presence, |l| l % 2 == 0),
        longest_odd: longest(&presence, |l| l % 2 == 1),
        presence,
    }
}

/// `(c, ec, oc)`.
pub fn extremal_cycle_lengths(g: &Graph, budget: u64) -> (LengthBound, LengthBound, LengthBound) {
    let s = cycle_spectrum(g, budget);
    (s.circumference, s.longest_even, s.longest_odd)
}

/// Result of a `C_{l,k}`-freeness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub free: bool,
    /// A forbidden cycle when `free` is false.
    pub violation: Option<Vec<usize>>,
}

/// Forbidden odd lengths of `C_{l,k} = {C_3, ..., C_{2l-1}, C_{2k+1}}`.
pub fn family_lengths(l: usize, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..l).map(|i| 2 * i + 1).collect();
    if !v.contains(&(2 * k + 1)) {
        v.push(2 * k + 1);
    }
    v
}

/// Whether `g` contains none of the given cycle lengths, searched to
/// completion. Short odd lengths are settled by the odd girth.
pub fn is_free_of_lengths(g: &Graph, lengths: &[usize], budget: u64) -> Result<FamilyCheck> {
    let odd = shortest_odd_cycle(g);
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    for &len in &sorted {
        if len < 3 || len > g.n() {
            continue;
        }
        let status = match &odd {
            None if len % 2 == 1 => CycleStatus::Absent,
            Some(c) if c.len() == len => CycleStatus::Present(c.clone()),
            Some(c) if len % 2 == 1 && len < c.len() => CycleStatus::Absent,
            _ => contains_cycle_of_length(g, len, budget),
        };
        match status {
            CycleStatus::Present(w) => {
                return Ok(FamilyCheck {
                    free: false,
                    violation: Some(w),
                })
            }
            CycleStatus::Absent => {}
            CycleStatus::Unknown => {
                return Err(Error::BudgetExhausted {
                    length: len,
                    graph6: to_graph6_string(g),
                })
            }
        }
    }
    Ok(FamilyCheck {
        free: true,
        violation: None,
    })
}

/// Whether `g` is `C_{l,k}`-free.
pub fn is_family_free(g: &Graph, l: usize, k: usize, budget: u64) -> Result<FamilyCheck> {
    if l == 0 || l > k {
        return Err(Error::ParameterOutOfRange(format!(
            "need 1 <= l <= k, got l = {l}, k = {k}"
        )));
    }
    is_free_of_lengths(g, &family_lengths(l, k), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, PartChoice};

    fn cycle(n: usize) -> Graph {
        build_family(&FamilySpec::Cycle { n }).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e)
    }

    fn c3t(n: usize) -> Graph {
        build_family(&FamilySpec::CycleAttachedTuran {
            n,
            l: 1,
            part: PartChoice::Smaller,
        })
        .unwrap()
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(shortest_odd_cycle(&cycle(9)).unwrap().len(), 9);
        let t = shortest_odd_cycle(&c3t(10)).unwrap();
        assert_eq!(t.len(), 3);
        assert!(is_valid_cycle(&c3t(10), &t));
        let p = shortest_odd_cycle(&petersen()).unwrap();
        assert_eq!(p.len(), 5);
        assert!(is_valid_cycle(&petersen(), &p));
        assert!(shortest_odd_cycle(&cycle(8)).is_none());
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&cycle(8)), Some(8));
        assert_eq!(
            girth(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])),
            None
        );
        let k33 = build_family(&FamilySpec::CompleteBipartite { a: 3, b: 3 }).unwrap();
        assert_eq!(girth(&k33), Some(4));
    }

    #[test]
    fn spectra() {
        let s = cycle_spectrum(&cycle(5), DEFAULT_BUDGET);
        assert_eq!(s.present_lengths(), vec![5]);
        assert_eq!((s.girth, s.odd_girth), (Some(5), Some(5)));
        assert_eq!(
            s.circumference,
            LengthBound {
                value: Some(5),
                exact: true
            }
        );
        assert_eq!(
            s.longest_even,
            LengthBound {
                value: None,
                exact: true
            }
        );

        let s = cycle_spectrum(&Graph::complete(4), DEFAULT_BUDGET);
        assert_eq!(s.present_lengths(), vec![3, 4]);
        assert_eq!(s.circumference.value, Some(4));

        let s = cycle_spectrum(&petersen(), DEFAULT_BUDGET);
        assert_eq!(s.present_lengths(), vec![5, 6, 8, 9]);
        assert!(s.is_complete());
    }

    #[test]
    fn extremal_lengths() {
        let (c, ec, oc) = extremal_cycle_lengths(&cycle(8), DEFAULT_BUDGET);
        assert_eq!((c.value, ec.value, oc.value), (Some(8), Some(8), None));
        let (c, ec, oc) = extremal_cycle_lengths(&Graph::complete(5), DEFAULT_BUDGET);
        assert_eq!((c.value, ec.value, oc.value), (Some(5), Some(4), Some(5)));
    }

    #[test]
    fn unknown_lengths_are_reported() {
        let s = cycle_spectrum(&Graph::complete(9), 1);
        assert!(!s.is_complete());
        assert!(!s.circumference.exact);
        assert!(s.to_lines().contains("status=unknown"));
    }

    #[test]
    fn family_checks() {
        let r = is_family_free(&cycle(7), 3, 3, DEFAULT_BUDGET).unwrap();
        assert!(!r.free);
        assert_eq!(r.violation.unwrap().len(), 7);
        assert!(is_family_free(&c3t(10), 1, 2, DEFAULT_BUDGET).unwrap().free);
        let t = build_family(&FamilySpec::BipartiteTuran { n: 8 }).unwrap();
        for k in 1..4 {
            assert!(is_family_free(&t, 1, k, DEFAULT_BUDGET).unwrap().free);
        }
        assert!(is_family_free(&cycle(5), 2, 1, DEFAULT_BUDGET).is_err());
        assert!(matches!(
            is_family_free(&Graph::complete(12), 2, 5, 1),
            Ok(FamilyCheck { free: false, .. })
        ));
        let dense = c3t(12);
        assert!(matches!(
            is_family_free(&dense, 1, 5, 1),
            Err(Error::BudgetExhausted { length: 11, .. })
        ));
    }

    #[test]
    fn spectrum_lines() {
        let s = cycle_spectrum(&Graph::complete(4), DEFAULT_BUDGET);
        let text = s.to_lines();
        assert!(text.starts_with("g=3 og=3 c=4 ec=4 oc=3\n"));
        assert!(text.contains("L=4 status=present witness=0-"));
    }
}
