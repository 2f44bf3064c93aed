//! Fixture graphs shared by the benchmarks.

use oddspec_core::graph::{build_family, FamilySpec, PartChoice};
use oddspec_core::Graph;

/// `C_{2l+1}(T_{n-2l,2})` with the cycle on the smaller part.
pub fn cycle_attached(n: usize, l: usize) -> Graph {
    build_family(&FamilySpec::CycleAttachedTuran {
        n,
        l,
        part: PartChoice::Smaller,
    })
    .expect("valid parameters")
}

/// The 2k-path replacement of an edge of `T_{n-2k+1,2}`.
pub fn path_replaced(n: usize, k: usize) -> Graph {
    build_family(&FamilySpec::PathReplacedTuran { n, k }).expect("valid parameters")
}

/// Orders used by the size sweeps.
pub const ORDERS: [usize; 4] = [16, 32, 64, 128];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for n in ORDERS {
            assert_eq!(cycle_attached(n, 1).n(), n);
            assert_eq!(path_replaced(n, 2).n(), n);
        }
    }
}
