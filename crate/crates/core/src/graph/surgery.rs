//! Graph surgeries: edge subdivision, edge rotation, blow-ups and cycle
//! attachment. All return new graphs; inputs are never modified.

use super::{Graph, VertexLabel, MAX_VERTICES};
use crate::error::{Error, Result};

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v));
    }
    Ok(())
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: MAX_VERTICES,
            what: "graph",
        });
    }
    Ok(())
}

fn extend_labels(g: &Graph, extra: usize) -> Option<Vec<VertexLabel>> {
    g.labels().map(|l| {
        let mut l = l.to_vec();
        l.extend(std::iter::repeat_n(VertexLabel::default(), extra));
        l
    })
}

/// `G_uv`: removes `uv` and joins both ends to a new vertex `n`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge { u, v });
    }
    check_size(g.n() + 1)?;
    let w = g.n();
    let mut h = Graph::empty(g.n() + 1);
    for (a, b) in g.edges() {
        h.add_edge(a, b);
    }
    h.remove_edge(u, v);
    h.add_edge(u, w);
    h.add_edge(w, v);
    Ok(match extend_labels(g, 1) {
        Some(l) => h.with_labels(l),
        None => h,
    })
}

/// `G - {vw : w in W} + {uw : w in W}`.
///
/// Requires `W ⊆ N(v) \ N(u)` with `u, v ∉ W`; every offending `w` is reported.
pub fn rotate_edges(g: &Graph, v: usize, u: usize, w_set: &[usize]) -> Result<Graph> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::RotationPrecondition {
            offending: vec![],
            reason: "u and v must differ".into(),
        });
    }
    let mut offending = Vec::new();
    for &w in w_set {
        check_vertex(g, w)?;
        if w == u || w == v || !g.has_edge(v, w) || g.has_edge(u, w) {
            offending.push(w);
        }
    }
    if !offending.is_empty() {
        return Err(Error::RotationPrecondition {
            offending,
            reason: "need w in N(v) \\ N(u), w != u, w != v".into(),
        });
    }
    let mut h = g.clone();
    for &w in w_set {
        h.remove_edge(v, w);
        h.add_edge(u, w);
    }
    Ok(h)
}

/// Replaces vertex `i` of `base` by an independent set of `sizes[i]`
/// vertices; each base edge becomes a complete bipartite join.
///
/// Blocks are numbered consecutively in base order and labelled with the
/// base vertex as `part`.
pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != base.n() {
        return Err(Error::LengthMismatch {
            expected: base.n(),
            got: sizes.len(),
        });
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::ParameterOutOfRange(format!(
            "blow-up size for vertex {i} must be positive"
        )));
    }
    let total: usize = sizes.iter().sum();
    check_size(total)?;
    let mut start = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        start.push(acc);
        acc += s;
    }
    let mut h = Graph::empty(total);
    for (a, b) in base.edges() {
        for x in start[a]..start[a] + sizes[a] {
            for y in start[b]..start[b] + sizes[b] {
                h.add_edge(x, y);
            }
        }
    }
    let mut labels = Vec::with_capacity(total);
    for (i, &s) in sizes.iter().enumerate() {
        labels.extend(std::iter::repeat_n(VertexLabel::part(i as u16), s));
    }
    Ok(h.with_labels(labels))
}

/// Glues a cycle of `length` onto vertex `at`: `at` becomes the cycle's first
/// vertex and `length - 1` new vertices follow in walk order.
pub fn attach_cycle(base: &Graph, at: usize, length: usize) -> Result<Graph> {
    check_vertex(base, at)?;
    if length < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "cycle length {length} < 3"
        )));
    }
    let n = base.n() + length - 1;
    check_size(n)?;
    let mut h = Graph::empty(n);
    for (a, b) in base.edges() {
        h.add_edge(a, b);
    }
    let mut walk = vec![at];
    walk.extend(base.n()..n);
    for i in 0..length {
        h.add_edge(walk[i], walk[(i + 1) % length]);
    }
    let mut labels = base
        .labels()
        .map(|l| l.to_vec())
        .unwrap_or_else(|| vec![VertexLabel::default(); base.n()]);
    labels[at].walk = Some(0);
    labels.extend((1..length).map(|i| VertexLabel::walk(i as u16)));
    Ok(h.with_labels(labels))
}

/// Odd-cycle attachment; see [`attach_cycle`].
pub fn attach_odd_cycle(base: &Graph, at: usize, length: usize) -> Result<Graph> {
    if length.is_multiple_of(2) {
        return Err(Error::ParameterOutOfRange(format!(
            "cycle length {length} is even"
        )));
    }
    attach_cycle(base, at, length)
}
