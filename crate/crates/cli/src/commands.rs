//! Subcommand implementations. Each returns the text to print.

use crate::input::{load_graph, parse_edges, parse_family, parse_list, parse_range, read_text};
use crate::{
    Cli, ClimbArgs, Command, CompareArgs, ConstraintArgs, ConstructArgs, EncodeArgs, MadArgs,
    PeelArgs, ReportArgs, ScanArgs, SpectrumArgs, Status, VerifyArgs,
};
use anyhow::{bail, Context, Result};
use oddspec_core::cycles::cycle_spectrum;
use oddspec_core::density::{biconnected_reduction, edge_bound_checks, mad, peel_to_min_degree};
use oddspec_core::format::{fmt_f64, join_vertices};
use oddspec_core::graph::{build_family, to_graph6_string};
use oddspec_core::search::{
    local_search, scan_exhaustive, scan_graph6, ConstraintSet, LocalOptions, ScanEntry,
    ScanOptions, SearchReport,
};
use oddspec_core::spectral::{
    compare_spectral_radii, ordering_label, perron, refine_certificate, ExactRational,
};
use oddspec_core::verify::{
    check_instance, check_lemma, eigenvector_structure_report, summary_csv,
    verify_consecutive_cycles, verify_main_theorem, CheckOptions, Scope, TheoremSource,
    VerdictRecord, VERDICT_SCHEMA,
};
use oddspec_core::Graph;
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::io::Write;

/// Version of every JSON record printed by the CLI.
const SCHEMA: u32 = 1;

pub fn run(cli: &Cli) -> Result<Status> {
    let threads = match cli.command {
        Command::Scan(_) | Command::Verify(_) => cli.workers.unwrap_or(0),
        _ => 1,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("starting worker pool")?;
    let (out, status) = pool.install(|| dispatch(cli))?;
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(out.as_bytes())
        .context("writing standard output")?;
    Ok(status)
}

fn dispatch(cli: &Cli) -> Result<(String, Status)> {
    let out = match &cli.command {
        Command::Construct(a) => construct(cli, a)?,
        Command::Encode(a) => encode(cli, a)?,
        Command::Decode(a) => decode(cli, &load_graph(&a.graph)?),
        Command::Spectrum(a) => spectrum(cli, a)?,
        Command::Cycles(a) => cycles(cli, &load_graph(&a.graph)?),
        Command::Mad(a) => mad_cmd(cli, a)?,
        Command::Peel(a) => peel(cli, a)?,
        Command::Scan(a) => scan(cli, a)?,
        Command::Climb(a) => climb(cli, a)?,
        Command::Verify(a) => return verify(cli, a),
        Command::Compare(a) => compare(cli, a)?,
        Command::Report(a) => return report(a),
    };
    Ok((out, Status::Success))
}

fn json_line(mut v: Value) -> String {
    v["schema"] = json!(SCHEMA);
    format!("{v}\n")
}

fn interval(lo: &ExactRational, hi: &ExactRational) -> String {
    format!("[{}, {}]", fmt_f64(lo.to_f64()), fmt_f64(hi.to_f64()))
}

fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {path}"))
}

fn construct(cli: &Cli, a: &ConstructArgs) -> Result<String> {
    let flags = [
        ("n", a.n.map(|v| v.to_string())),
        ("l", a.l.map(|v| v.to_string())),
        ("k", a.k.map(|v| v.to_string())),
        ("r", a.r.map(|v| v.to_string())),
        ("a", a.a.map(|v| v.to_string())),
        ("b", a.b.map(|v| v.to_string())),
        ("part", a.part.clone()),
        ("base", a.base.clone()),
        ("sizes", a.sizes.clone()),
    ];
    let text = if a.family.contains(':') || a.family.contains('=') {
        if let Some((key, _)) = flags.iter().find(|(_, v)| v.is_some()) {
            bail!(
                "--{key} cannot be combined with the shorthand `{}`",
                a.family
            );
        }
        a.family.clone()
    } else {
        let mut s = format!("family={}", a.family);
        for (key, v) in &flags {
            if let Some(v) = v {
                s.push_str(&format!(" {key}={v}"));
            }
        }
        s
    };
    let spec = parse_family(&text)?;
    let g = build_family(&spec)?;
    let g6 = to_graph6_string(&g);
    Ok(if cli.json {
        json_line(
            json!({"family": spec.to_string(), "graph6": g6, "n": g.n(), "e": g.edge_count()}),
        )
    } else {
        format!("{g6}\nn={} e={}\n", g.n(), g.edge_count())
    })
}

fn encode(cli: &Cli, a: &EncodeArgs) -> Result<String> {
    let g = match (&a.edges, a.n, &a.graph) {
        (Some(edges), Some(n), _) => parse_edges(n, edges)?,
        (_, _, Some(s)) => load_graph(s)?,
        _ => bail!("give --n with --edges, or --graph"),
    };
    let g6 = to_graph6_string(&g);
    Ok(if cli.json {
        json_line(json!({"graph6": g6, "n": g.n(), "e": g.edge_count()}))
    } else {
        format!("{g6}\n")
    })
}

fn decode(cli: &Cli, g: &Graph) -> String {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if cli.json {
        return json_line(
            json!({"graph6": to_graph6_string(g), "n": g.n(), "e": edges.len(), "edges": edges}),
        );
    }
    let mut out = format!("n={} e={}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u}-{v}\n"));
    }
    out
}

fn spectrum(cli: &Cli, a: &SpectrumArgs) -> Result<String> {
    let g = load_graph(&a.graph.graph)?;
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        bail!("--tol must be positive, got {}", a.tol);
    }
    let cert = match a.exact {
        Some(w) if !(w > 0.0 && w.is_finite()) => bail!("--exact width must be positive, got {w}"),
        Some(w) => refine_certificate(&g, w)?,
        None => perron(&g, a.tol),
    };
    let vector: Vec<String> = cert.vector.iter().map(|&x| fmt_f64(x)).collect();
    if cli.json {
        let mut v = cert.to_record();
        v["graph6"] = json!(to_graph6_string(&g));
        if a.vector {
            v["vector"] = json!(vector);
        }
        return Ok(json_line(v));
    }
    let mut out = format!(
        "lambda_lo={} lambda_hi={} width={} iterations={} exact={} converged={}\n",
        fmt_f64(cert.lambda_lo),
        fmt_f64(cert.lambda_hi),
        fmt_f64(cert.width()),
        cert.iterations,
        cert.exact,
        cert.converged
    );
    if let (Some(lo), Some(hi)) = (&cert.exact_lo, &cert.exact_hi) {
        out.push_str(&format!("exact_lo={lo} exact_hi={hi}\n"));
    }
    if a.vector {
        out.push_str(&format!("x={}\n", vector.join(",")));
    }
    Ok(out)
}

fn cycles(cli: &Cli, g: &Graph) -> String {
    let s = cycle_spectrum(g, cli.budget);
    if cli.json {
        let mut v = serde_json::to_value(&s).expect("spectra serialise");
        v["graph6"] = json!(to_graph6_string(g));
        v["complete"] = json!(s.is_complete());
        return json_line(v);
    }
    s.to_lines()
}

fn mad_cmd(cli: &Cli, a: &MadArgs) -> Result<String> {
    let g = load_graph(&a.graph.graph)?;
    let w = mad(&g)?;
    let bounds = a.k.map(|k| edge_bound_checks(&g, k)).transpose()?;
    if cli.json {
        let mut v = json!({
            "mad": w.mad.to_string(),
            "mad_decimal": fmt_f64(w.mad.to_f64()),
            "subset": w.subset,
        });
        if let Some(b) = &bounds {
            v["edge_bounds"] = serde_json::to_value(b).expect("bounds serialise");
        }
        return Ok(json_line(v));
    }
    let mut out = format!(
        "mad={} decimal={} subset={}\n",
        w.mad,
        fmt_f64(w.mad.to_f64()),
        join_vertices(&w.subset, ",")
    );
    if let Some(b) = &bounds {
        out.push_str(&b.to_lines());
    }
    Ok(out)
}

fn peel(cli: &Cli, a: &PeelArgs) -> Result<String> {
    let g = load_graph(&a.graph.graph)?;
    let r = peel_to_min_degree(&g, a.threshold)?;
    let reduced = a.reduce.then(|| {
        let rr = biconnected_reduction(&r.graph);
        let kept: Vec<usize> = rr.kept.iter().map(|&i| r.kept[i]).collect();
        let deleted: Vec<usize> = rr.deleted.clone();
        (rr.graph, kept, deleted)
    });
    if cli.json {
        let mut v = serde_json::to_value(&r).expect("peel results serialise");
        v["graph6"] = json!(to_graph6_string(&r.graph));
        v["degree_sum"] = json!(r.degree_sum());
        if let Some((h, kept, deleted)) = &reduced {
            v["reduced"] = json!({"graph6": to_graph6_string(h), "kept": kept, "deleted": deleted});
        }
        return Ok(json_line(v));
    }
    let mut out = r.to_lines();
    out.push_str(&format!(
        "graph6={} degree_sum={}\n",
        to_graph6_string(&r.graph),
        r.degree_sum()
    ));
    if let Some((h, kept, deleted)) = &reduced {
        out.push_str(&format!(
            "reduced kept={} deleted={} graph6={}\n",
            join_vertices(kept, ","),
            join_vertices(deleted, ","),
            to_graph6_string(h)
        ));
    }
    Ok(out)
}

fn constraint_set(c: &ConstraintArgs, default_n: Option<usize>) -> Result<ConstraintSet> {
    let Some(n) = c.n.or(default_n) else {
        bail!("--n is required");
    };
    let mut set = match (c.l, c.k, &c.forbid) {
        (Some(l), Some(k), _) => ConstraintSet::for_family(n, l, k)?,
        (_, _, Some(list)) => ConstraintSet::new(n, &parse_list(list)?, true, false)?,
        _ => ConstraintSet::new(n, &[], true, false)?,
    };
    set.require_nonbipartite = !c.allow_bipartite;
    set.require_connected = c.connected;
    Ok(set)
}

fn entry_line(role: &str, e: &ScanEntry) -> String {
    format!(
        "{role} graph6={} lambda={} exact=[{}, {}]\n",
        e.graph6,
        interval(&e.lambda_lo, &e.lambda_hi),
        e.lambda_lo,
        e.lambda_hi
    )
}

fn scan_text(r: &SearchReport) -> String {
    let mut out = format!(
        "constraints: {}\nenumerated={} passed={} maximizers={}\n",
        r.constraints,
        r.enumerated,
        r.passed,
        r.best.len()
    );
    for e in &r.best {
        out.push_str(&entry_line("best", e));
    }
    if let Some(e) = &r.runner_up {
        out.push_str(&entry_line("runner_up", e));
    }
    if let Some(gap) = &r.runner_up_gap {
        out.push_str(&format!("gap>={} gap={gap}\n", fmt_f64(gap.to_f64())));
    }
    if let Some(d) = &r.digest {
        out.push_str(&format!("sha256={d}\n"));
    }
    out.push_str(&format!("regime: {}\n", r.regime));
    out
}

fn scan(cli: &Cli, a: &ScanArgs) -> Result<String> {
    let constraints = constraint_set(&a.constraints, None)?;
    let opts = ScanOptions {
        budget: cli.budget,
        checkpoint: a.checkpoint.as_ref().map(Into::into),
        ..ScanOptions::default()
    };
    let report = match &a.input {
        Some(path) => scan_graph6(&read_text(path)?, &constraints, &opts)?,
        None => scan_exhaustive(&constraints, &opts)?,
    };
    let json = format!("{}\n", report.to_json());
    if let Some(path) = &a.report {
        write_file(path, &json)?;
    }
    if let Some(path) = &a.csv {
        write_file(path, &report.to_csv())?;
    }
    Ok(if cli.json { json } else { scan_text(&report) })
}

fn climb(cli: &Cli, a: &ClimbArgs) -> Result<String> {
    let seed = load_graph(&a.seed)?;
    let constraints = constraint_set(&a.constraints, Some(seed.n()))?;
    let opts = LocalOptions {
        max_steps: a.max_steps,
        budget: cli.budget,
    };
    let r = local_search(&seed, &constraints, &opts)?;
    let last = r.trace.last().expect("trace starts with the seed");
    if cli.json {
        return Ok(json_line(json!({
            "constraints": constraints,
            "trace": r.trace,
            "graph6": to_graph6_string(&r.graph),
            "rotations_checked": r.rotations_checked,
        })));
    }
    let mut out = String::new();
    for step in &r.trace {
        out.push_str(&step.to_line());
        out.push('\n');
    }
    out.push_str(&format!(
        "final graph6={} lambda={} moves={} rotations_checked={}\n",
        to_graph6_string(&r.graph),
        interval(&last.lambda_lo, &last.lambda_hi),
        r.trace.len() - 1,
        r.rotations_checked
    ));
    Ok(out)
}

fn instance_record(cli: &Cli, id: &str, g: &Graph, seed: u64) -> Result<VerdictRecord> {
    let eval = check_instance(id, g, seed, cli.budget)?;
    let g6 = to_graph6_string(g);
    let mut r = VerdictRecord::new(id, format!("instance graph6={g6} seed={seed}"), true);
    r.examined = 1;
    r.hypothesis_met = usize::from(eval.hypothesis);
    r.failures = usize::from(eval.violation.is_some());
    for tag in &eval.tags {
        r.detail(tag, 1);
    }
    r.settle(eval.violation.map(|v| (g6, v)));
    Ok(r)
}

fn verify_one(cli: &Cli, a: &VerifyArgs, id: &str) -> Result<VerdictRecord> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{id} needs --{flag}"));
    let graph = || -> Result<Graph> {
        load_graph(
            a.graph
                .as_deref()
                .with_context(|| format!("{id} needs --graph"))?,
        )
    };
    match id {
        "main_theorem" => {
            let (n, l, k) = (need(a.n, "n")?, need(a.l, "l")?, need(a.k, "k")?);
            let source = match &a.input {
                Some(path) => TheoremSource::Graph6(read_text(path)?),
                None => TheoremSource::Enumerate,
            };
            let opts = ScanOptions {
                budget: cli.budget,
                ..ScanOptions::default()
            };
            Ok(verify_main_theorem(n, l, k, &source, &opts)?.0)
        }
        "consecutive_cycles" => Ok(verify_consecutive_cycles(
            &graph()?,
            a.eps,
            a.k_cfg,
            cli.budget,
        )?),
        "eigenvector" => {
            let text = a
                .graph
                .as_deref()
                .context("eigenvector needs --graph with a family")?;
            Ok(eigenvector_structure_report(
                &parse_family(text)?,
                need(a.k, "k")?,
            )?)
        }
        _ if a.graph.is_some() => instance_record(cli, id, &graph()?, a.seed),
        _ => {
            let scope = if let Some(n) = a.exhaustive {
                Scope::Exhaustive { n }
            } else if let Some(count) = a.random {
                Scope::Random {
                    count,
                    seed: a.seed,
                    min_n: a.min_n,
                    max_n: a.max_n,
                }
            } else if let Some(grid) = &a.grid {
                let (n_min, n_max) = parse_range(grid)?;
                Scope::Grid { n_min, n_max }
            } else {
                bail!("{id} needs one of --exhaustive, --random, --grid or --graph");
            };
            let opts = CheckOptions {
                budget: cli.budget,
                timing: a.timing,
            };
            Ok(check_lemma(id, &scope, &opts)?)
        }
    }
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<(String, Status)> {
    let mut records = Vec::new();
    for id in &a.check {
        records.push(verify_one(cli, a, id)?);
    }
    let lines: String = records
        .iter()
        .map(|r| format!("{}\n", r.to_json_line()))
        .collect();
    if let Some(path) = &a.jsonl {
        let mut f = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening {path}"))?;
        f.write_all(lines.as_bytes())
            .with_context(|| format!("writing {path}"))?;
    }
    if let Some(path) = &a.csv {
        write_file(path, &summary_csv(&records))?;
    }
    let out = if cli.json {
        lines
    } else {
        records
            .iter()
            .map(|r| format!("{}\n", r.summary_line()))
            .collect()
    };
    Ok((out, status_of(&records)))
}

fn status_of(records: &[VerdictRecord]) -> Status {
    if records.iter().any(|r| r.outcome.is_fail()) {
        Status::VerificationFailed
    } else {
        Status::Success
    }
}

fn compare(cli: &Cli, a: &CompareArgs) -> Result<String> {
    let (g1, g2) = (load_graph(&a.a)?, load_graph(&a.b)?);
    let c = compare_spectral_radii(&g1, &g2)?;
    let proof = serde_json::to_value(c.proof).expect("proofs serialise");
    let proof = proof.as_str().expect("proofs serialise as strings");
    if cli.json {
        let mut v = serde_json::to_value(&c).expect("comparisons serialise");
        v["a_graph6"] = json!(to_graph6_string(&g1));
        v["b_graph6"] = json!(to_graph6_string(&g2));
        v["gap_decimal"] = json!(c.gap.as_ref().map(|g| fmt_f64(g.to_f64())));
        return Ok(json_line(v));
    }
    let mut out = format!("{} certified", ordering_label(c.ordering));
    if let (Some(gap), true) = (&c.gap, c.ordering != Ordering::Equal) {
        out.push_str(&format!(" gap≥{} gap_exact={gap}", fmt_f64(gap.to_f64())));
    }
    out.push_str(&format!(
        " proof={proof} a={} b={}\n",
        interval(&c.a.0, &c.a.1),
        interval(&c.b.0, &c.b.1)
    ));
    Ok(out)
}

fn report(a: &ReportArgs) -> Result<(String, Status)> {
    let mut records = Vec::new();
    for path in &a.inputs {
        let text = read_text(path)?;
        for (i, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let r: VerdictRecord = serde_json::from_str(line)
                .with_context(|| format!("{path} line {}: not a verdict record", i + 1))?;
            if r.schema != VERDICT_SCHEMA {
                bail!("{path} line {}: unsupported schema {}", i + 1, r.schema);
            }
            records.push(r);
        }
    }
    let csv = summary_csv(&records);
    let out = match &a.out {
        Some(path) => {
            write_file(path, &csv)?;
            String::new()
        }
        None => csv,
    };
    Ok((out, status_of(&records)))
}
