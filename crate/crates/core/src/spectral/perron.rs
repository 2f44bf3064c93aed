//! Power iteration with Collatz-Wielandt bounds.

use crate::graph::Graph;

/// Iteration cap per component.
pub const DEFAULT_MAX_ITERATIONS: usize = 2_000_000;

const STALL_ITERATIONS: usize = 5_000;

/// Compressed neighbour lists of an induced subgraph.
pub(crate) struct Csr {
    pub start: Vec<usize>,
    pub adj: Vec<u32>,
}

impl Csr {
    pub fn induced(g: &Graph, vertices: &[usize]) -> Self {
        let mut pos = vec![u32::MAX; g.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i as u32;
        }
        let mut start = Vec::with_capacity(vertices.len() + 1);
        let mut adj = Vec::new();
        start.push(0);
        for &v in vertices {
            adj.extend(
                g.neighbors(v)
                    .filter_map(|w| (pos[w] != u32::MAX).then_some(pos[w])),
            );
            start.push(adj.len());
        }
        Csr { start, adj }
    }

    pub fn len(&self) -> usize {
        self.start.len() - 1
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.adj[self.start[i]..self.start[i + 1]]
    }

    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().map(|&j| x[j as usize]).sum();
        }
    }
}

/// Collatz-Wielandt min/max of `(Ax)_i / x_i`.
pub(crate) fn cw_bounds(a: &Csr, x: &[f64], ax: &mut [f64]) -> (f64, f64) {
    a.apply(x, ax);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (&num, &den) in ax.iter().zip(x) {
        let r = num / den;
        lo = lo.min(r);
        hi = hi.max(r);
    }
    (lo, hi)
}

pub(crate) struct ComponentResult {
    pub lo: f64,
    pub hi: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Perron pair of a connected graph given as a CSR, iterating on `A + I`
/// from the all-ones vector. The returned vector has maximum entry 1.
pub(crate) fn perron_component(a: &Csr, tol: f64, max_iter: usize) -> ComponentResult {
    let m = a.len();
    if m == 1 {
        return ComponentResult {
            lo: 0.0,
            hi: 0.0,
            vector: vec![1.0],
            iterations: 0,
            converged: true,
        };
    }
    // CW bounds of A + I are monotone under iteration, hence so are those of A
    let mut x = vec![1.0; m];
    let mut ax = vec![0.0; m];
    let mut it = 0;
    let mut best_width = f64::INFINITY;
    let mut last_gain = 0;
    let (lo, hi) = loop {
        let (lo, hi) = cw_bounds(a, &x, &mut ax);
        if hi - lo < best_width {
            best_width = hi - lo;
            last_gain = it;
        }
        // rounding can stall the bounds just above a tight tolerance
        if hi - lo <= tol || it >= max_iter || it - last_gain > STALL_ITERATIONS {
            break (lo, hi);
        }
        let mut mx = 0.0f64;
        for (xi, &a) in x.iter_mut().zip(ax.iter()) {
            *xi += a;
            mx = mx.max(*xi);
        }
        for xi in x.iter_mut() {
            *xi /= mx;
        }
        it += 1;
    };
    let vector = x;
    ComponentResult {
        lo,
        hi,
        converged: hi - lo <= tol,
        vector,
        iterations: it,
    }
}
