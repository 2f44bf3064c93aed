//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are reported as FAIL but do not change the
//! exit status; each has a written explanation next to it. Any other failure
//! exits with status 1.

use oddspec_core::graph::{
    build_family, decode_graph6, encode_graph6, to_graph6_string, FamilySpec, PartChoice,
};
use oddspec_core::search::{enumerate_graphs, ScanOptions};
use oddspec_core::spectral::{compare_spectral_radii, perron, DEFAULT_TOL};
use oddspec_core::verify::{
    check_lemma, eigenvector_structure_report, instance_rng, path_richness, random_gnp,
    structural_decomposition, verify_consecutive_cycles, verify_main_theorem, CheckOptions,
    Outcome, Scope, TheoremSource, VerdictRecord,
};
use oddspec_core::{Graph, Result};
use std::cmp::Ordering;
use std::time::{Duration, Instant};

const SEED: u64 = 42;

/// Criteria that cannot hold as stated, with the reason.
const KNOWN_RED: [(u32, &str); 1] = [(
    7,
    "the strict mad/lambda bound is attained with equality by K_{2k+1} at n = 2k + 1 (K3, K5, K7)",
)];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict {
        ok,
        detail: detail.into(),
    })
}

fn cat(n: usize, l: usize) -> FamilySpec {
    FamilySpec::CycleAttachedTuran {
        n,
        l,
        part: PartChoice::Smaller,
    }
}

fn exhaustive_upto(id: &str, max_n: usize) -> Result<Vec<VerdictRecord>> {
    (1..=max_n)
        .map(|n| check_lemma(id, &Scope::Exhaustive { n }, &CheckOptions::default()))
        .collect()
}

/// No failures, and at least one order met the hypothesis.
fn clean(records: &[VerdictRecord]) -> (bool, usize, usize, usize) {
    let failures: usize = records.iter().map(|r| r.failures).sum();
    let hyp: usize = records.iter().map(|r| r.hypothesis_met).sum();
    let seen: usize = records.iter().map(|r| r.examined).sum();
    (
        failures == 0 && hyp > 0 && records.iter().all(|r| !r.outcome.is_fail()),
        seen,
        hyp,
        failures,
    )
}

fn within(lo: f64, hi: f64, truth: f64, tol: f64) -> bool {
    lo - tol <= truth && truth <= hi + tol && (0.5 * (lo + hi) - truth).abs() <= tol
}

fn c1() -> Result<Verdict> {
    let mut worst: f64 = 0.0;
    for a in 1..=40 {
        for b in a..=40 {
            let g = build_family(&FamilySpec::CompleteBipartite { a, b })?;
            let c = perron(&g, DEFAULT_TOL);
            let truth = ((a * b) as f64).sqrt();
            if !within(c.lambda_lo, c.lambda_hi, truth, 1e-9) {
                return verdict(
                    false,
                    format!("K_{{{a},{b}}} gave [{}, {}]", c.lambda_lo, c.lambda_hi),
                );
            }
            worst = worst.max((c.midpoint() - truth).abs());
        }
    }
    for n in 3..=200 {
        let g = build_family(&FamilySpec::Cycle { n })?;
        let c = perron(&g, DEFAULT_TOL);
        if !within(c.lambda_lo, c.lambda_hi, 2.0, 1e-9) {
            return verdict(
                false,
                format!("C_{n} gave [{}, {}]", c.lambda_lo, c.lambda_hi),
            );
        }
        worst = worst.max((c.midpoint() - 2.0).abs());
    }
    verdict(true, format!("max error {worst:.2e}"))
}

fn c2() -> Result<Verdict> {
    let records = exhaustive_upto("nosal", 8)?;
    let (ok, seen, hyp, fails) = clean(&records);
    let eq: u64 = records
        .iter()
        .filter_map(|r| r.details.get("equality_cases").and_then(|v| v.as_u64()))
        .sum();
    verdict(
        ok,
        format!("graphs={seen} triangle_free={hyp} equality_cases={eq} failures={fails}"),
    )
}

fn c3() -> Result<Verdict> {
    let mut parts = Vec::new();
    let mut all = true;
    for id in ["bondy_woodall", "erdos_gallai", "weakly_pancyclic"] {
        let (ok, seen, hyp, fails) = clean(&exhaustive_upto(id, 8)?);
        all &= ok;
        parts.push(format!(
            "{id}: graphs={seen} hypothesis={hyp} failures={fails}"
        ));
    }
    verdict(all, parts.join("; "))
}

fn grid(id: &str, n_min: usize, n_max: usize) -> Result<Verdict> {
    let r = check_lemma(id, &Scope::Grid { n_min, n_max }, &CheckOptions::default())?;
    verdict(
        r.outcome == Outcome::Pass && r.failures == 0,
        format!(
            "points={} failures={} outcome={}",
            r.examined,
            r.failures,
            r.outcome.label()
        ),
    )
}

fn random(id: &str, count: usize, min_n: usize, max_n: usize) -> Result<VerdictRecord> {
    check_lemma(
        id,
        &Scope::Random {
            count,
            seed: SEED,
            min_n,
            max_n,
        },
        &CheckOptions::default(),
    )
}

fn c5() -> Result<Verdict> {
    let r = random("rotation", 10_000, 3, 16)?;
    let narrow = r
        .details
        .get("margin_below_1e-7")
        .and_then(|v| v.as_u64())
        .unwrap_or(0);
    verdict(
        r.failures == 0 && r.hypothesis_met == 10_000,
        format!(
            "instances={} failures={} below_1e-7={narrow}",
            r.hypothesis_met, r.failures
        ),
    )
}

fn c6() -> Result<Verdict> {
    let r = random("hoffman_smith", 1_000, 5, 30)?;
    verdict(
        r.failures == 0 && r.hypothesis_met == 1_000,
        format!("instances={} failures={}", r.hypothesis_met, r.failures),
    )
}

fn c7() -> Result<Verdict> {
    let del = random("deletion", 1_000, 1, 30)?;
    let (ml_ok, _, ml_hyp, ml_fail) = clean(&exhaustive_upto("mad_lambda", 8)?);
    let (me_ok, me_seen, _, me_fail) = clean(&exhaustive_upto("mad_exact", 8)?);
    let mut witnesses = Vec::new();
    for n in 1..=8 {
        let r = check_lemma(
            "mad_lambda",
            &Scope::Exhaustive { n },
            &CheckOptions::default(),
        )?;
        if let Outcome::Fail { witness, values } = &r.outcome {
            witnesses.push(format!("n={n} {witness} ({values}) x{}", r.failures));
        }
    }
    verdict(
        del.failures == 0 && ml_ok && me_ok,
        format!(
            "deletion: graphs={} failures={}; mad_lambda: hypothesis={ml_hyp} failures={ml_fail} [{}]; mad_exact: graphs={me_seen} failures={me_fail}",
            del.examined,
            del.failures,
            witnesses.join("; ")
        ),
    )
}

fn c9() -> Result<Verdict> {
    let mut failed = Vec::new();
    for n in [30, 50, 100] {
        for l in [1, 2] {
            let r = eigenvector_structure_report(&cat(n, l), l + 1)?;
            if r.failures != 0 {
                failed.push(r.summary_line());
            }
        }
    }
    verdict(
        failed.is_empty(),
        if failed.is_empty() {
            "6 constructions".into()
        } else {
            failed.join("; ")
        },
    )
}

fn c10() -> Result<Verdict> {
    let g = build_family(&cat(50, 1))?;
    let d = structural_decomposition(&g, 2)?;
    let low_ok = d.low.len() == 2
        && d.low
            .iter()
            .all(|&v| g.degree(v) == 2 && d.cycle.contains(&v));
    let bip_ok = d.g_minus_low_bipartite && d.g_minus_cycle_complete_bipartite == Some(true);
    let iso_ok = d.outside_degree[1] == 0 && d.outside_degree[2] == 0;
    let paths = path_richness(&g, &d, 5, 9, SEED, oddspec_core::cycles::DEFAULT_BUDGET)?;
    let paths_ok = paths.iter().all(|p| p.path.is_some());
    verdict(
        low_ok && bip_ok && iso_ok && paths_ok,
        format!(
            "L={:?} G-L bipartite={} G-V(C) complete bipartite={:?} outside(u2,u3)=({},{}) odd paths found {}/{}",
            d.low,
            d.g_minus_low_bipartite,
            d.g_minus_cycle_complete_bipartite,
            d.outside_degree[1],
            d.outside_degree[2],
            paths.iter().filter(|p| p.path.is_some()).count(),
            paths.len()
        ),
    )
}

fn c11() -> Result<Verdict> {
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, l, k) in [(5, 1, 1), (8, 1, 2), (9, 1, 2)] {
        let (r, report) =
            verify_main_theorem(n, l, k, &TheoremSource::Enumerate, &ScanOptions::default())?;
        let unique = report.unique_maximizer().is_some();
        let certified = report.passed == 1 || report.runner_up_gap.is_some();
        let json = serde_json::to_string(&report.to_json())
            .map_err(|e| oddspec_core::Error::Io(e.to_string()))?;
        ok &=
            unique && certified && !report.in_regime && !r.in_regime && json.contains("\"schema\"");
        parts.push(format!(
            "n={n} l={l} k={k}: passed={} maximizer={} matches_expected={} gap={} outcome={}",
            report.passed,
            report.best.first().map_or("-", |e| e.graph6.as_str()),
            r.details
                .get("matches_expected")
                .map_or("-".into(), |v| v.to_string()),
            r.details
                .get("gap_decimal")
                .map_or("-".into(), |v| v.to_string()),
            r.outcome.label()
        ));
    }
    verdict(ok, parts.join("; "))
}

fn c12() -> Result<Verdict> {
    let mut above = 0;
    let mut vacuous = 0;
    let mut problems = Vec::new();
    let mut i = 0u64;
    while above < 20 {
        let mut rng = instance_rng(SEED, i);
        i += 1;
        let g = random_gnp(&mut rng, 10, 14);
        if g.is_bipartite() {
            continue;
        }
        let r = verify_consecutive_cycles(&g, 0.05, 1, oddspec_core::cycles::DEFAULT_BUDGET)?;
        let gt = r.details["relation"] == "GT";
        match (&r.outcome, gt) {
            (Outcome::Pass, true) => above += 1,
            (Outcome::Vacuous, false) => vacuous += 1,
            (o, _) => problems.push(format!("{} {}", to_graph6_string(&g), o.label())),
        }
    }
    for n in 10..=14 {
        let g = build_family(&cat(n, 1))?;
        let r = verify_consecutive_cycles(&g, 0.05, 1, oddspec_core::cycles::DEFAULT_BUDGET)?;
        if r.outcome != Outcome::Vacuous {
            problems.push(format!(
                "threshold graph n={n} labelled {}",
                r.outcome.label()
            ));
        }
    }
    verdict(
        problems.is_empty(),
        format!(
            "above threshold={above} vacuous={vacuous} threshold graphs vacuous=5 sampled={i} {}",
            problems.join("; ")
        ),
    )
}

fn same(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edges().eq(b.edges())
}

fn c13() -> Result<Verdict> {
    let mut count = 0;
    for n in 1..=8 {
        for g in enumerate_graphs(n, false)? {
            let back = decode_graph6(&encode_graph6(&g)?)?;
            if !same(&g, &back) {
                return verdict(
                    false,
                    format!("round trip changed {}", to_graph6_string(&g)),
                );
            }
            count += 1;
        }
    }
    let run = || -> Result<String> {
        let (r, report) =
            verify_main_theorem(7, 1, 2, &TheoremSource::Enumerate, &ScanOptions::default())?;
        let v = check_lemma(
            "deletion",
            &Scope::Random {
                count: 50,
                seed: SEED,
                min_n: 2,
                max_n: 12,
            },
            &CheckOptions::default(),
        )?;
        Ok(format!(
            "{}\n{}\n{}\n{}",
            r.to_json_line(),
            report.to_json(),
            report.to_csv(),
            v.to_json_line()
        ))
    };
    let (a, b) = (run()?, run()?);
    verdict(
        a == b,
        format!("round trips={count} identical reports={}", a == b),
    )
}

fn c8_certified() -> Result<Verdict> {
    grid("c3t_upper", 20, 200)
}

fn c4_certified() -> Result<Verdict> {
    // spot-check the grid against a direct comparison
    let g12 = build_family(&cat(12, 1))?;
    let g12b = build_family(&cat(12, 4))?;
    if compare_spectral_radii(&g12, &g12b)?.ordering != Ordering::Greater {
        return verdict(false, "direct comparison at n=12 disagrees");
    }
    grid("family_order", 12, 60)
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<Verdict>);

fn main() {
    let criteria: [Criterion; 13] = [
        (1, "closed-form spectra", Duration::from_secs(10), c1),
        (
            2,
            "triangle-free radius bound, n <= 8",
            Duration::from_secs(300),
            c2,
        ),
        (
            3,
            "long/many cycles and weak pancyclicity, n <= 8",
            Duration::from_secs(600),
            c3,
        ),
        (
            4,
            "cycle-attached family ordering grid",
            Duration::from_secs(120),
            c4_certified,
        ),
        (5, "edge rotation, 10000 instances", Duration::MAX, c5),
        (6, "edge subdivision, 1000 instances", Duration::MAX, c6),
        (
            7,
            "deletion, mad/lambda and mad exactness",
            Duration::from_secs(900),
            c7,
        ),
        (
            8,
            "C3(T) upper bound grid",
            Duration::from_secs(120),
            c8_certified,
        ),
        (9, "eigenvector structure", Duration::from_secs(30), c9),
        (10, "structural decomposition", Duration::MAX, c10),
        (
            11,
            "exhaustive extremal scans",
            Duration::from_secs(1800),
            c11,
        ),
        (12, "consecutive cycles", Duration::MAX, c12),
        (13, "graph6 round trip and determinism", Duration::MAX, c13),
    ];
    let filter: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut unexpected = 0;
    for (id, name, limit, run) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(v) => (v.ok && elapsed <= limit, v.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let timing = if limit == Duration::MAX {
            format!("{:.1}s", elapsed.as_secs_f64())
        } else {
            format!("{:.1}s of {}s", elapsed.as_secs_f64(), limit.as_secs())
        };
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        println!(
            "{} {id:>2} {name}: {detail} [{timing}]",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            match known {
                Some((_, why)) => println!("     known: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        std::process::exit(1);
    }
}
