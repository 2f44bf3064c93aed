//! Constrained maximisation of the spectral radius over a graph stream.

use super::constraints::ConstraintSet;
use super::enumerate::enumerate_graphs;
use crate::cycles::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::format::fmt_f64;
use crate::graph::{decode_graph6, read_graph6_lines, to_graph6_string, Graph};
use crate::spectral::{compare_spectral_radii, exact_enclosure, ExactRational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::cmp::Ordering;
use std::path::PathBuf;

pub const REPORT_SCHEMA: u32 = 1;

/// Label attached to results the asymptotic theorem says nothing about.
pub const EMPIRICAL_LABEL: &str = "empirical: outside the theorem's n >= 187k regime";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    Exhaustive,
    Local,
    Ingest,
}

/// A graph that passed the filters, with its exact enclosure.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    /// Position in the input stream.
    pub index: usize,
    pub graph: Graph,
    pub graph6: String,
    pub lambda_lo: ExactRational,
    pub lambda_hi: ExactRational,
}

impl ScanEntry {
    pub fn new(index: usize, graph: Graph) -> Result<Self> {
        let (lambda_lo, lambda_hi) = exact_enclosure(&graph)?;
        Ok(ScanEntry {
            index,
            graph6: to_graph6_string(&graph),
            graph,
            lambda_lo,
            lambda_hi,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "graph6": self.graph6,
            "lambda_lo": fmt_f64(self.lambda_lo.to_f64()),
            "lambda_hi": fmt_f64(self.lambda_hi.to_f64()),
            "exact_lo": self.lambda_lo.to_string(),
            "exact_hi": self.lambda_hi.to_string(),
        })
    }
}

/// Certified order of two entries; exact comparison only when the
/// enclosures overlap.
fn order(a: &ScanEntry, b: &ScanEntry) -> Result<Ordering> {
    if a.lambda_lo > b.lambda_hi {
        return Ok(Ordering::Greater);
    }
    if b.lambda_lo > a.lambda_hi {
        return Ok(Ordering::Less);
    }
    Ok(compare_spectral_radii(&a.graph, &b.graph)?.ordering)
}

/// Maximiser class and the best graph strictly below it.
#[derive(Clone, Debug, Default)]
pub struct Leaders {
    pub best: Vec<ScanEntry>,
    pub second: Option<ScanEntry>,
}

impl Leaders {
    pub fn offer(&mut self, x: ScanEntry) -> Result<()> {
        let Some(top) = self.best.first() else {
            self.best.push(x);
            return Ok(());
        };
        match order(&x, top)? {
            Ordering::Greater => {
                let old = std::mem::replace(&mut self.best, vec![x]);
                self.second = old.into_iter().next();
            }
            Ordering::Equal => self.best.push(x),
            Ordering::Less => {
                let replace = match &self.second {
                    None => true,
                    Some(s) => order(&x, s)? == Ordering::Greater,
                };
                if replace {
                    self.second = Some(x);
                }
            }
        }
        Ok(())
    }

    /// Certified lower bound on `λ(best) - λ(second)`.
    pub fn gap(&self) -> Result<Option<ExactRational>> {
        match (self.best.first(), &self.second) {
            (Some(b), Some(s)) => Ok(compare_spectral_radii(&b.graph, &s.graph)?.gap),
            _ => Ok(None),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Per-length cycle search budget.
    pub budget: u64,
    /// Resumable state is written here after every chunk.
    pub checkpoint: Option<PathBuf>,
    pub chunk: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: DEFAULT_BUDGET,
            checkpoint: None,
            chunk: 4096,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
struct Checkpoint {
    schema: u32,
    mode: ScanMode,
    constraints: ConstraintSet,
    digest: Option<String>,
    offset: usize,
    passed: usize,
    best: Vec<(usize, String)>,
    runner_up: Option<(usize, String)>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub mode: ScanMode,
    pub constraints: ConstraintSet,
    pub best: Vec<ScanEntry>,
    pub runner_up: Option<ScanEntry>,
    pub runner_up_gap: Option<ExactRational>,
    pub enumerated: usize,
    pub passed: usize,
    pub in_regime: bool,
    pub regime: String,
    /// SHA-256 of the ingested stream.
    pub digest: Option<String>,
}

impl SearchReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "mode": self.mode,
            "constraints": self.constraints,
            "best": self.best.iter().map(ScanEntry::to_json).collect::<Vec<_>>(),
            "runner_up": self.runner_up.as_ref().map(ScanEntry::to_json),
            "runner_up_gap": self.runner_up_gap.as_ref().map(|g| g.to_string()),
            "runner_up_gap_decimal": self.runner_up_gap.as_ref().map(|g| fmt_f64(g.to_f64())),
            "counts": {"enumerated": self.enumerated, "passed": self.passed},
            "in_regime": self.in_regime,
            "regime": self.regime,
            "digest": self.digest,
        })
    }

    /// `rank,role,graph6,lambda_lo,lambda_hi`; maximisers share rank 1.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rank,role,graph6,lambda_lo,lambda_hi\n");
        let row = |rank: usize, role: &str, e: &ScanEntry| {
            format!(
                "{rank},{role},{},{},{}\n",
                e.graph6,
                fmt_f64(e.lambda_lo.to_f64()),
                fmt_f64(e.lambda_hi.to_f64())
            )
        };
        for e in &self.best {
            out.push_str(&row(1, "best", e));
        }
        if let Some(e) = &self.runner_up {
            out.push_str(&row(2, "runner_up", e));
        }
        out
    }

    pub fn unique_maximizer(&self) -> Option<&ScanEntry> {
        match self.best.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }
}

fn regime(c: &ConstraintSet) -> (bool, String) {
    match c.family {
        Some((_, k)) if c.n >= 187 * k => (true, "in regime".into()),
        _ => (false, EMPIRICAL_LABEL.into()),
    }
}

fn load_checkpoint(
    opts: &ScanOptions,
    mode: ScanMode,
    c: &ConstraintSet,
    digest: &Option<String>,
) -> Result<Option<Checkpoint>> {
    let Some(path) = &opts.checkpoint else {
        return Ok(None);
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let cp: Checkpoint =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("checkpoint: {e}")))?;
    if cp.schema != REPORT_SCHEMA || cp.mode != mode || &cp.constraints != c || &cp.digest != digest
    {
        return Err(Error::Parse(format!(
            "checkpoint {} belongs to a different scan",
            path.display()
        )));
    }
    Ok(Some(cp))
}

fn restore(entry: &(usize, String)) -> Result<ScanEntry> {
    ScanEntry::new(entry.0, decode_graph6(entry.1.as_bytes())?)
}

/// Scans `graphs` in order, certifying every graph that passes.
pub fn extremal_scan(
    graphs: &[Graph],
    constraints: &ConstraintSet,
    mode: ScanMode,
    digest: Option<String>,
    opts: &ScanOptions,
) -> Result<SearchReport> {
    let mut leaders = Leaders::default();
    let mut passed = 0;
    let mut offset = 0;
    if let Some(cp) = load_checkpoint(opts, mode, constraints, &digest)? {
        offset = cp.offset.min(graphs.len());
        passed = cp.passed;
        leaders.best = cp.best.iter().map(restore).collect::<Result<_>>()?;
        leaders.second = cp.runner_up.as_ref().map(restore).transpose()?;
    }
    let chunk = opts.chunk.max(1);
    while offset < graphs.len() {
        let end = (offset + chunk).min(graphs.len());
        let entries: Vec<Option<ScanEntry>> = graphs[offset..end]
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                if constraints.admits(g, opts.budget)? {
                    ScanEntry::new(offset + i, g.clone()).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        for e in entries.into_iter().flatten() {
            passed += 1;
            leaders.offer(e)?;
        }
        offset = end;
        if let Some(path) = &opts.checkpoint {
            let cp = Checkpoint {
                schema: REPORT_SCHEMA,
                mode,
                constraints: constraints.clone(),
                digest: digest.clone(),
                offset,
                passed,
                best: leaders
                    .best
                    .iter()
                    .map(|e| (e.index, e.graph6.clone()))
                    .collect(),
                runner_up: leaders.second.as_ref().map(|e| (e.index, e.graph6.clone())),
            };
            let text = serde_json::to_string_pretty(&cp).map_err(|e| Error::Io(e.to_string()))?;
            std::fs::write(path, text)?;
        }
    }
    for e in &leaders.best {
        if let Some(why) = constraints.violation(&e.graph, opts.budget)? {
            return Err(Error::ConstraintViolation(format!(
                "maximiser {} fails: {why}",
                e.graph6
            )));
        }
    }
    let (in_regime, regime) = regime(constraints);
    Ok(SearchReport {
        mode,
        constraints: constraints.clone(),
        runner_up_gap: leaders.gap()?,
        best: leaders.best,
        runner_up: leaders.second,
        enumerated: graphs.len(),
        passed,
        in_regime,
        regime,
        digest,
    })
}

/// Scan over every isomorphism class on `constraints.n` vertices.
pub fn scan_exhaustive(constraints: &ConstraintSet, opts: &ScanOptions) -> Result<SearchReport> {
    let graphs = enumerate_graphs(constraints.n, constraints.require_connected)?;
    extremal_scan(&graphs, constraints, ScanMode::Exhaustive, None, opts)
}

/// Scan over a newline-delimited graph6 stream, assumed free of isomorphic
/// duplicates; the report records the stream's SHA-256.
pub fn scan_graph6(
    text: &str,
    constraints: &ConstraintSet,
    opts: &ScanOptions,
) -> Result<SearchReport> {
    let graphs = read_graph6_lines(text.as_bytes())?;
    extremal_scan(
        &graphs,
        constraints,
        ScanMode::Ingest,
        Some(sha256_hex(text.as_bytes())),
        opts,
    )
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, canonical_code, FamilySpec, PartChoice};

    fn s1t(n: usize) -> Graph {
        build_family(&FamilySpec::SubdividedTuranEdge { n }).unwrap()
    }

    #[test]
    fn triangle_is_the_only_nonbipartite_order_three_graph() {
        let c = ConstraintSet::new(3, &[], true, false).unwrap();
        let r = scan_exhaustive(&c, &ScanOptions::default()).unwrap();
        assert_eq!(r.passed, 1);
        assert_eq!(r.unique_maximizer().unwrap().graph, Graph::complete(3));
        assert!(r.runner_up.is_none());
    }

    #[test]
    fn triangle_free_order_five() {
        let c = ConstraintSet::for_family(5, 1, 1).unwrap();
        let r = scan_exhaustive(&c, &ScanOptions::default()).unwrap();
        let best = r.unique_maximizer().expect("unique");
        assert_eq!(
            canonical_code(&best.graph).unwrap(),
            canonical_code(&s1t(5)).unwrap()
        );
        // C_5 is the only triangle-free non-bipartite graph on five vertices
        assert_eq!(r.passed, 1);
        assert!(r.runner_up_gap.is_none());
        assert!(!r.in_regime);
        assert_eq!(r.regime, EMPIRICAL_LABEL);
    }

    #[test]
    fn dominance_over_every_passer() {
        let c = ConstraintSet::for_family(7, 1, 2).unwrap();
        let opts = ScanOptions::default();
        let r = scan_exhaustive(&c, &opts).unwrap();
        assert!(r.runner_up_gap.unwrap().signum() > 0);
        let best = &r.best[0];
        for g in enumerate_graphs(7, false).unwrap() {
            if c.admits(&g, opts.budget).unwrap() {
                let ord = compare_spectral_radii(&g, &best.graph).unwrap().ordering;
                assert_ne!(ord, Ordering::Greater);
            }
        }
    }

    #[test]
    fn checkpoint_resume_matches_uninterrupted_scan() {
        let dir = std::env::temp_dir().join(format!("oddspec-cp-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let cp = dir.join("scan.json");
        let _ = std::fs::remove_file(&cp);
        let c = ConstraintSet::for_family(7, 1, 2).unwrap();
        let graphs = enumerate_graphs(7, false).unwrap();
        let plain = extremal_scan(
            &graphs,
            &c,
            ScanMode::Exhaustive,
            None,
            &ScanOptions::default(),
        )
        .unwrap();
        let opts = ScanOptions {
            checkpoint: Some(cp.clone()),
            chunk: 100,
            ..Default::default()
        };
        // first pass over a prefix leaves a checkpoint behind
        extremal_scan(&graphs[..450], &c, ScanMode::Exhaustive, None, &opts).unwrap();
        let resumed = extremal_scan(&graphs, &c, ScanMode::Exhaustive, None, &opts).unwrap();
        assert_eq!(resumed.to_json(), plain.to_json());
        let other = ConstraintSet::for_family(7, 1, 3).unwrap();
        assert!(extremal_scan(&graphs, &other, ScanMode::Exhaustive, None, &opts).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn ingest_records_digest_and_ties() {
        let c5 = build_family(&FamilySpec::Cycle { n: 5 }).unwrap();
        let text = format!("{}\n{}\n", to_graph6_string(&c5), to_graph6_string(&c5));
        let c = ConstraintSet::new(5, &[3], true, false).unwrap();
        let r = scan_graph6(&text, &c, &ScanOptions::default()).unwrap();
        assert_eq!(r.best.len(), 2);
        assert_eq!(
            r.digest.as_deref(),
            Some(sha256_hex(text.as_bytes()).as_str())
        );
        assert_eq!(r.mode, ScanMode::Ingest);
        assert!(r.to_csv().starts_with("rank,role,graph6"));
    }

    #[test]
    fn reports_are_deterministic() {
        let c = ConstraintSet::for_family(6, 1, 2).unwrap();
        let a = scan_exhaustive(&c, &ScanOptions::default())
            .unwrap()
            .to_json()
            .to_string();
        let b = scan_exhaustive(&c, &ScanOptions::default())
            .unwrap()
            .to_json()
            .to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn sha256_known_vector() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn c3t_attachment_choice() {
        let g = build_family(&FamilySpec::CycleAttachedTuran {
            n: 9,
            l: 1,
            part: PartChoice::Smaller,
        })
        .unwrap();
        let c = ConstraintSet::for_family(9, 1, 2).unwrap();
        assert!(c.admits(&g, DEFAULT_BUDGET).unwrap());
    }
}
