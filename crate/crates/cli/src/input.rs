//! Resolution of graph arguments: family shorthand, graph6 files and literal
//! graph6 strings.

use anyhow::{bail, Context, Result};
use oddspec_core::graph::{
    build_family, decode_graph6, read_graph6_lines, FamilySpec, MAX_VERTICES,
};
use oddspec_core::{Error, Graph};
use std::io::Read;

/// Reads a whole file, or standard input for `-`.
pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Parses a family in key-value form or `name:p1:p2` shorthand.
pub fn parse_family(s: &str) -> Result<FamilySpec> {
    s.parse::<FamilySpec>()
        .with_context(|| format!("invalid family `{s}`"))
}

/// `@file.g6` (first graph of the file, `@-` for standard input), a family
/// in either notation, or a literal graph6 string.
pub fn load_graph(s: &str) -> Result<Graph> {
    if let Some(path) = s.strip_prefix('@') {
        let text = read_text(path)?;
        let graphs =
            read_graph6_lines(text.as_bytes()).with_context(|| format!("parsing {path}"))?;
        return match graphs.into_iter().next() {
            Some(g) => Ok(g),
            None => bail!("{path} contains no graph"),
        };
    }
    if s.contains(':') || s.contains('=') {
        return Ok(build_family(&parse_family(s)?)?);
    }
    match s.parse::<FamilySpec>() {
        Ok(spec) => Ok(build_family(&spec)?),
        Err(Error::Parse(msg)) if msg.starts_with("unknown family") => decode_graph6(s.as_bytes())
            .with_context(|| format!("`{s}` is neither a family nor graph6")),
        Err(e) => Err(e).with_context(|| format!("invalid family `{s}`")),
    }
}

/// Edge list such as `0-1,1-2,2-0`.
pub fn parse_edges(n: usize, s: &str) -> Result<Graph> {
    if n > MAX_VERTICES {
        bail!("n = {n} exceeds the limit of {MAX_VERTICES}");
    }
    let mut edges = Vec::new();
    for tok in s.split([',', ' ', '\n']).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .with_context(|| format!("expected an edge `u-v`, got `{tok}`"))?;
        let u: usize = a.parse().with_context(|| format!("bad vertex `{a}`"))?;
        let v: usize = b.parse().with_context(|| format!("bad vertex `{b}`"))?;
        if u >= n || v >= n {
            bail!("edge {u}-{v} has a vertex outside 0..{n}");
        }
        if u == v {
            bail!("loop at vertex {u}");
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Comma-separated list of non-negative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .with_context(|| format!("bad integer `{t}`"))
        })
        .collect()
}

/// `a..b` or a single order `a`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: usize = a
        .parse()
        .with_context(|| format!("bad range start in `{s}`"))?;
    let b: usize = b
        .parse()
        .with_context(|| format!("bad range end in `{s}`"))?;
    if a > b {
        bail!("empty range `{s}`");
    }
    Ok((a, b))
}
