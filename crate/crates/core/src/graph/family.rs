//! Named constructions.
//!
//! Vertex numbering is fixed: the smaller bipartite part first, then the
//! larger part, then attached cycle or path vertices in walk order. When the
//! two parts have equal size the cycle is glued to part index 0.

use super::graph6::{decode_graph6, to_graph6_string};
use super::surgery::{attach_cycle, blow_up};
use super::{Graph, VertexLabel, MAX_VERTICES};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Which side of `T_{n-2l,2}` receives the attached odd cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartChoice {
    Smaller,
    Larger,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete `r`-partite graph with parts as equal as possible.
    Turan {
        n: usize,
        r: usize,
    },
    /// `T_{n,2}`.
    BipartiteTuran {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// `S_1(T_{n-1,2})`: one edge of `T_{n-1,2}` subdivided.
    SubdividedTuranEdge {
        n: usize,
    },
    /// `S_{2k-1}(T_{n-2k+1,2})`: one edge of `T_{n-2k+1,2}` replaced by a path
    /// with `2k - 1` internal vertices.
    PathReplacedTuran {
        n: usize,
        k: usize,
    },
    /// `C_{2l+1}(T_{n-2l,2})`.
    CycleAttachedTuran {
        n: usize,
        l: usize,
        part: PartChoice,
    },
    /// Path on `n - 4` vertices with two pendant vertices at each end.
    YGraph {
        n: usize,
    },
    BlowUp {
        base: Graph,
        sizes: Vec<usize>,
    },
    /// Three disjoint `K_{n/6,n/6}` joined by a triangle through one vertex of each.
    Haggkvist {
        n: usize,
    },
    /// `2l + 1` disjoint `K_{m,m}` with `m = n / (2(2l+1))`, one vertex of
    /// each on a `C_{2l+1}`.
    OddCycleKBlowup {
        n: usize,
        l: usize,
    },
    /// Mycielskian of `C_5`.
    Grotzsch,
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: MAX_VERTICES,
            what: "graph",
        });
    }
    Ok(())
}

impl FamilySpec {
    /// Short machine name, as used in text forms.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Turan { .. } => "turan",
            FamilySpec::BipartiteTuran { .. } => "bipartite_turan",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::SubdividedTuranEdge { .. } => "subdivided_turan_edge",
            FamilySpec::PathReplacedTuran { .. } => "path_replaced_turan",
            FamilySpec::CycleAttachedTuran { .. } => "cycle_attached_turan",
            FamilySpec::YGraph { .. } => "y_graph",
            FamilySpec::BlowUp { .. } => "blow_up",
            FamilySpec::Haggkvist { .. } => "haggkvist",
            FamilySpec::OddCycleKBlowup { .. } => "odd_cycle_blowup",
            FamilySpec::Grotzsch => "grotzsch",
        }
    }

    /// Checks the per-variant parameter constraints.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Turan { n, r } => {
                if n == 0 || r == 0 {
                    return Err(out_of_range("turan requires n >= 1 and r >= 1"));
                }
                check_cap(n)
            }
            FamilySpec::BipartiteTuran { n } | FamilySpec::Path { n } => {
                if n == 0 {
                    return Err(out_of_range(format!("{} requires n >= 1", self.name())));
                }
                check_cap(n)
            }
            FamilySpec::CompleteBipartite { a, b } => {
                if a + b == 0 {
                    return Err(out_of_range("complete_bipartite requires a + b >= 1"));
                }
                check_cap(a + b)
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(out_of_range("cycle requires n >= 3"));
                }
                check_cap(n)
            }
            FamilySpec::SubdividedTuranEdge { n } => {
                if n < 3 {
                    return Err(out_of_range("subdivided_turan_edge requires n >= 3"));
                }
                check_cap(n)
            }
            FamilySpec::PathReplacedTuran { n, k } => {
                if k == 0 {
                    return Err(out_of_range("path_replaced_turan requires k >= 1"));
                }
                if n < 2 * k + 3 {
                    return Err(out_of_range(format!(
                        "path_replaced_turan requires n >= 2k + 3 (n = {n}, k = {k})"
                    )));
                }
                check_cap(n)
            }
            FamilySpec::CycleAttachedTuran { n, l, .. } => {
                if l == 0 {
                    return Err(out_of_range("cycle_attached_turan requires l >= 1"));
                }
                if n < 2 * l + 4 {
                    return Err(out_of_range(format!(
                        "cycle_attached_turan requires n >= 2l + 4 (n = {n}, l = {l})"
                    )));
                }
                check_cap(n)
            }
            FamilySpec::YGraph { n } => {
                if n < 6 {
                    return Err(out_of_range("y_graph requires n >= 6"));
                }
                check_cap(n)
            }
            FamilySpec::BlowUp {
                ref base,
                ref sizes,
            } => {
                if sizes.len() != base.n() {
                    return Err(Error::LengthMismatch {
                        expected: base.n(),
                        got: sizes.len(),
                    });
                }
                if sizes.contains(&0) {
                    return Err(out_of_range("blow_up sizes must be positive"));
                }
                check_cap(sizes.iter().sum())
            }
            FamilySpec::Haggkvist { n } => {
                if n == 0 || n % 6 != 0 {
                    return Err(out_of_range(format!(
                        "haggkvist requires 6 | n and n >= 6 (n = {n})"
                    )));
                }
                check_cap(n)
            }
            FamilySpec::OddCycleKBlowup { n, l } => {
                if l == 0 {
                    return Err(out_of_range("odd_cycle_blowup requires l >= 1"));
                }
                let q = 2 * (2 * l + 1);
                if n == 0 || n % q != 0 {
                    return Err(out_of_range(format!(
                        "odd_cycle_blowup requires 2(2l + 1) | n (n = {n}, l = {l})"
                    )));
                }
                check_cap(n)
            }
            FamilySpec::Grotzsch => Ok(()),
        }
    }

    /// Vertex and edge counts implied by the definition.
    pub fn closed_form_counts(&self) -> Result<(usize, usize)> {
        self.validate()?;
        let half = |m: usize| m * m / 4;
        Ok(match *self {
            FamilySpec::Turan { n, r } => {
                let sizes = balanced_parts(n, r);
                let sq: usize = sizes.iter().map(|s| s * s).sum();
                (n, (n * n - sq) / 2)
            }
            FamilySpec::BipartiteTuran { n } => (n, half(n)),
            FamilySpec::CompleteBipartite { a, b } => (a + b, a * b),
            FamilySpec::Cycle { n } => (n, n),
            FamilySpec::Path { n } => (n, n - 1),
            FamilySpec::SubdividedTuranEdge { n } => (n, half(n - 1) + 1),
            FamilySpec::PathReplacedTuran { n, k } => (n, half(n - 2 * k + 1) + 2 * k - 1),
            FamilySpec::CycleAttachedTuran { n, l, .. } => (n, half(n - 2 * l) + 2 * l + 1),
            FamilySpec::YGraph { n } => (n, n - 1),
            FamilySpec::BlowUp {
                ref base,
                ref sizes,
            } => (
                sizes.iter().sum(),
                base.edges().map(|(u, v)| sizes[u] * sizes[v]).sum(),
            ),
            FamilySpec::Haggkvist { n } => (n, 3 * (n / 6) * (n / 6) + 3),
            FamilySpec::OddCycleKBlowup { n, l } => {
                let m = n / (2 * (2 * l + 1));
                (n, (2 * l + 1) * (m * m + 1))
            }
            FamilySpec::Grotzsch => (11, 20),
        })
    }
}

/// `n` split into `r` parts as equal as possible, smaller parts first.
fn balanced_parts(n: usize, r: usize) -> Vec<usize> {
    let q = n / r;
    let extra = n % r;
    (0..r).map(|i| q + usize::from(i >= r - extra)).collect()
}

fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut labels = Vec::with_capacity(n);
    let mut start = 0;
    let mut starts = Vec::new();
    for (p, &s) in sizes.iter().enumerate() {
        starts.push(start);
        labels.extend(std::iter::repeat_n(VertexLabel::part(p as u16), s));
        start += s;
    }
    for (i, &si) in sizes.iter().enumerate() {
        for (j, &sj) in sizes.iter().enumerate().skip(i + 1) {
            for u in starts[i]..starts[i] + si {
                for v in starts[j]..starts[j] + sj {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g.with_labels(labels)
}

fn bipartite_turan(m: usize) -> Graph {
    complete_multipartite(&balanced_parts(m, 2))
}

/// `T_{m,2}` with the edge between vertex 0 and the first vertex of the
/// larger part replaced by a path with `internal` new vertices.
fn replace_turan_edge(m: usize, internal: usize) -> Graph {
    let base = bipartite_turan(m);
    let a = 0;
    let b = m / 2;
    let n = m + internal;
    let mut g = Graph::empty(n);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
    }
    g.remove_edge(a, b);
    let mut walk = vec![a];
    walk.extend(m..n);
    walk.push(b);
    for w in walk.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    let mut labels = base.labels().expect("turan graphs are labelled").to_vec();
    labels[a].walk = Some(0);
    labels[b].walk = Some(internal as u16 + 1);
    labels.extend((1..=internal).map(|i| VertexLabel::walk(i as u16)));
    g.with_labels(labels)
}

fn odd_cycle_blowup(blocks: usize, m: usize) -> Graph {
    let n = blocks * 2 * m;
    let mut g = Graph::empty(n);
    let mut labels = Vec::with_capacity(n);
    for b in 0..blocks {
        let s = b * 2 * m;
        for u in s..s + m {
            for v in s + m..s + 2 * m {
                g.add_edge(u, v);
            }
        }
        labels.extend(std::iter::repeat_n(VertexLabel::part(2 * b as u16), m));
        labels.extend(std::iter::repeat_n(VertexLabel::part(2 * b as u16 + 1), m));
        labels[s].walk = Some(b as u16);
    }
    for b in 0..blocks {
        g.add_edge(b * 2 * m, ((b + 1) % blocks) * 2 * m);
    }
    g.with_labels(labels)
}

fn grotzsch() -> Graph {
    let mut g = Graph::empty(11);
    for i in 0..5 {
        let j = (i + 1) % 5;
        g.add_edge(i, j);
        g.add_edge(i + 5, j);
        g.add_edge(i, j + 5);
        g.add_edge(i + 5, 10);
    }
    g
}

/// Builds the graph described by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Turan { n, r } => complete_multipartite(&balanced_parts(n, r)),
        FamilySpec::BipartiteTuran { n } => bipartite_turan(n),
        FamilySpec::CompleteBipartite { a, b } => complete_multipartite(&[a, b]),
        FamilySpec::Cycle { n } => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
                .with_labels((0..n).map(|i| VertexLabel::walk(i as u16)).collect())
        }
        FamilySpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
                .with_labels((0..n).map(|i| VertexLabel::walk(i as u16)).collect())
        }
        FamilySpec::SubdividedTuranEdge { n } => replace_turan_edge(n - 1, 1),
        FamilySpec::PathReplacedTuran { n, k } => replace_turan_edge(n - 2 * k + 1, 2 * k - 1),
        FamilySpec::CycleAttachedTuran { n, l, part } => {
            let m = n - 2 * l;
            let at = match part {
                PartChoice::Smaller => 0,
                PartChoice::Larger => m / 2,
            };
            attach_cycle(&bipartite_turan(m), at, 2 * l + 1)?
        }
        FamilySpec::YGraph { n } => {
            let p = n - 4;
            let mut edges: Vec<_> = (1..p).map(|i| (i - 1, i)).collect();
            edges.extend([(0, p), (0, p + 1), (p - 1, p + 2), (p - 1, p + 3)]);
            Graph::from_edges(n, &edges)
        }
        FamilySpec::BlowUp {
            ref base,
            ref sizes,
        } => blow_up(base, sizes)?,
        FamilySpec::Haggkvist { n } => odd_cycle_blowup(3, n / 6),
        FamilySpec::OddCycleKBlowup { n, l } => odd_cycle_blowup(2 * l + 1, n / (2 * (2 * l + 1))),
        FamilySpec::Grotzsch => grotzsch(),
    };
    debug_assert!(g.check_invariants());
    Ok(g)
}

impl fmt::Display for PartChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartChoice::Smaller => "smaller",
            PartChoice::Larger => "larger",
        })
    }
}

impl FromStr for PartChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smaller" => Ok(PartChoice::Smaller),
            "larger" => Ok(PartChoice::Larger),
            _ => Err(Error::Parse(format!(
                "part must be `smaller` or `larger`, got `{s}`"
            ))),
        }
    }
}

fn join_sizes(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Key-value text form, e.g. `family=cycle_attached_turan n=10 l=1 part=smaller`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={}", self.name())?;
        match self {
            FamilySpec::Turan { n, r } => write!(f, " n={n} r={r}"),
            FamilySpec::BipartiteTuran { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Path { n }
            | FamilySpec::SubdividedTuranEdge { n }
            | FamilySpec::YGraph { n }
            | FamilySpec::Haggkvist { n } => write!(f, " n={n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, " a={a} b={b}"),
            FamilySpec::PathReplacedTuran { n, k } => write!(f, " n={n} k={k}"),
            FamilySpec::CycleAttachedTuran { n, l, part } => write!(f, " n={n} l={l} part={part}"),
            FamilySpec::BlowUp { base, sizes } => {
                write!(
                    f,
                    " base={} sizes={}",
                    to_graph6_string(base),
                    join_sizes(sizes)
                )
            }
            FamilySpec::OddCycleKBlowup { n, l } => write!(f, " n={n} l={l}"),
            FamilySpec::Grotzsch => Ok(()),
        }
    }
}

fn parse_num(key: &str, v: &str) -> Result<usize> {
    v.parse()
        .map_err(|_| Error::Parse(format!("`{key}` expects a non-negative integer, got `{v}`")))
}

fn parse_sizes(v: &str) -> Result<Vec<usize>> {
    v.split(',').map(|s| parse_num("sizes", s.trim())).collect()
}

fn from_fields(name: &str, get: &dyn Fn(&str) -> Option<String>) -> Result<FamilySpec> {
    let need = |key: &str| -> Result<usize> {
        let v =
            get(key).ok_or_else(|| Error::Parse(format!("family `{name}` requires `{key}`")))?;
        parse_num(key, &v)
    };
    let spec = match name {
        "turan" => FamilySpec::Turan {
            n: need("n")?,
            r: need("r")?,
        },
        "bipartite_turan" => FamilySpec::BipartiteTuran { n: need("n")? },
        "complete_bipartite" => FamilySpec::CompleteBipartite {
            a: need("a")?,
            b: need("b")?,
        },
        "cycle" => FamilySpec::Cycle { n: need("n")? },
        "path" => FamilySpec::Path { n: need("n")? },
        "subdivided_turan_edge" => FamilySpec::SubdividedTuranEdge { n: need("n")? },
        "path_replaced_turan" => FamilySpec::PathReplacedTuran {
            n: need("n")?,
            k: need("k")?,
        },
        "cycle_attached_turan" => FamilySpec::CycleAttachedTuran {
            n: need("n")?,
            l: need("l")?,
            part: match get("part") {
                Some(p) => p.parse()?,
                None => PartChoice::Smaller,
            },
        },
        "y_graph" => FamilySpec::YGraph { n: need("n")? },
        "blow_up" => {
            let base = get("base")
                .ok_or_else(|| Error::Parse("family `blow_up` requires `base`".into()))?;
            let sizes = get("sizes")
                .ok_or_else(|| Error::Parse("family `blow_up` requires `sizes`".into()))?;
            FamilySpec::BlowUp {
                base: decode_graph6(base.as_bytes())?,
                sizes: parse_sizes(&sizes)?,
            }
        }
        "haggkvist" => FamilySpec::Haggkvist { n: need("n")? },
        "odd_cycle_blowup" => FamilySpec::OddCycleKBlowup {
            n: need("n")?,
            l: need("l")?,
        },
        "grotzsch" => FamilySpec::Grotzsch,
        other => return Err(Error::Parse(format!("unknown family `{other}`"))),
    };
    Ok(spec)
}

/// Positional parameter names for the `name:p1:p2` shorthand.
fn positional_keys(name: &str) -> &'static [&'static str] {
    match name {
        "turan" => &["n", "r"],
        "complete_bipartite" => &["a", "b"],
        "path_replaced_turan" => &["n", "k"],
        "cycle_attached_turan" => &["n", "l", "part"],
        "odd_cycle_blowup" => &["n", "l"],
        "blow_up" => &["base", "sizes"],
        "grotzsch" => &[],
        _ => &["n"],
    }
}

/// Accepts both the key-value form and the `name:p1:p2` shorthand
/// (`cycle_attached_turan:16:1`, `blow_up:Dhc:2,2,2,2,2`).
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec = if s.starts_with("family=") {
            let mut fields = Vec::new();
            for tok in s.split_whitespace() {
                let (k, v) = tok
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
                fields.push((k.to_string(), v.to_string()));
            }
            let name = fields[0].1.clone();
            let allowed = positional_keys(&name);
            if let Some((k, _)) = fields[1..]
                .iter()
                .find(|(k, _)| !allowed.contains(&k.as_str()))
            {
                return Err(Error::Parse(format!(
                    "unexpected key `{k}` for family `{name}`"
                )));
            }
            from_fields(&name, &|key| {
                fields
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| v.clone())
            })?
        } else {
            let mut parts = s.split(':');
            let name = parts.next().unwrap_or_default().to_string();
            let values: Vec<String> = parts.map(str::to_string).collect();
            let keys = positional_keys(&name);
            if values.len() > keys.len() {
                return Err(Error::Parse(format!(
                    "family `{name}` takes at most {} parameters, got {}",
                    keys.len(),
                    values.len()
                )));
            }
            from_fields(&name, &|key| {
                keys.iter()
                    .position(|k| *k == key)
                    .and_then(|i| values.get(i).cloned())
            })?
        };
        Ok(spec)
    }
}
