//! Isomorphism classes of small graphs by vertex augmentation.
//!
//! Every graph on `n` vertices arises from some graph on `n - 1` vertices by
//! adding a vertex with an arbitrary neighbourhood, so augmenting one
//! representative per class and deduplicating canonical codes yields each
//! class exactly once.

use crate::error::{Error, Result};
use crate::graph::{canonical_code, graph_from_code, Graph};
use rayon::prelude::*;

/// Largest order handled by built-in enumeration.
pub const ENUMERATION_MAX_VERTICES: usize = 9;

fn check_size(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: ENUMERATION_MAX_VERTICES,
            what: "built-in enumeration",
        });
    }
    Ok(())
}

/// Sorted canonical codes of all graphs on `n` vertices.
pub fn enumerate_codes(n: usize) -> Result<Vec<u128>> {
    check_size(n)?;
    let mut codes = vec![0u128];
    for order in 1..n {
        codes = augment(order, &codes);
    }
    Ok(codes)
}

fn augment(order: usize, parents: &[u128]) -> Vec<u128> {
    let mut out: Vec<u128> = parents
        .par_iter()
        .flat_map_iter(|&code| {
            let base = graph_from_code(order, code);
            let mut local = Vec::with_capacity(1 << order);
            for mask in 0u32..(1 << order) {
                let mut g = Graph::empty(order + 1);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..order {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, order);
                    }
                }
                local.push(canonical_code(&g).expect("order within canonicaliser range"));
            }
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    out.par_sort_unstable();
    out.dedup();
    out
}

/// One representative per isomorphism class, in canonical-code order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let codes = enumerate_codes(n)?;
    Ok(codes
        .into_par_iter()
        .map(|c| graph_from_code(n, c))
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}
