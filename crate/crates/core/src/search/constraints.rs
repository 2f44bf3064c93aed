use crate::cycles::{family_lengths, is_free_of_lengths};
use crate::error::{Error, Result};
use crate::format::join_vertices;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Filters applied to every graph of a scan or local search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub n: usize,
    /// Sorted, odd, each in `3..=n`.
    pub forbid_odd_lengths: Vec<usize>,
    pub require_nonbipartite: bool,
    pub require_connected: bool,
    /// `(l, k)` when the forbidden lengths come from `C_{l,k}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<(usize, usize)>,
}

impl ConstraintSet {
    pub fn new(
        n: usize,
        forbid: &[usize],
        require_nonbipartite: bool,
        require_connected: bool,
    ) -> Result<Self> {
        let mut lengths = forbid.to_vec();
        lengths.sort_unstable();
        lengths.dedup();
        if let Some(&bad) = lengths.iter().find(|&&l| l % 2 == 0 || l < 3 || l > n) {
            return Err(Error::ParameterOutOfRange(format!(
                "forbidden length {bad} must be odd and in 3..={n}"
            )));
        }
        Ok(ConstraintSet {
            n,
            forbid_odd_lengths: lengths,
            require_nonbipartite,
            require_connected,
            family: None,
        })
    }

    /// `C_{l,k}`-free and non-bipartite. Lengths above `n` cannot occur and
    /// are dropped.
    pub fn for_family(n: usize, l: usize, k: usize) -> Result<Self> {
        if l == 0 || l > k {
            return Err(Error::ParameterOutOfRange(format!(
                "need 1 <= l <= k, got l = {l}, k = {k}"
            )));
        }
        let lengths: Vec<usize> = family_lengths(l, k)
            .into_iter()
            .filter(|&x| x <= n)
            .collect();
        let mut c = ConstraintSet::new(n, &lengths, true, false)?;
        c.family = Some((l, k));
        Ok(c)
    }

    /// `None` when `g` passes, otherwise the first failed filter.
    pub fn violation(&self, g: &Graph, budget: u64) -> Result<Option<String>> {
        if g.n() != self.n {
            return Ok(Some(format!("order {} differs from {}", g.n(), self.n)));
        }
        if self.require_connected && !g.is_connected() {
            return Ok(Some("disconnected".into()));
        }
        if self.require_nonbipartite && g.is_bipartite() {
            return Ok(Some("bipartite".into()));
        }
        let check = is_free_of_lengths(g, &self.forbid_odd_lengths, budget)?;
        Ok(check
            .violation
            .map(|c| format!("contains C_{} at {}", c.len(), join_vertices(&c, "-"))))
    }

    pub fn admits(&self, g: &Graph, budget: u64) -> Result<bool> {
        Ok(self.violation(g, budget)?.is_none())
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} forbid={} nonbipartite={} connected={}",
            self.n,
            if self.forbid_odd_lengths.is_empty() {
                "none".to_string()
            } else {
                join_vertices(&self.forbid_odd_lengths, ",")
            },
            self.require_nonbipartite,
            self.require_connected
        )
    }
}
