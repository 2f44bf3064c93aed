//! Rigorous enclosures of the spectral radius.
//!
//! A floating Perron vector is converted exactly to rationals and its
//! Collatz-Wielandt quotients are evaluated in exact arithmetic, which gives
//! a valid enclosure regardless of rounding in the iteration. Tighter
//! enclosures come from sign bisection on the characteristic polynomial of the
//! component. Bisection is only sound on an interval whose sole root is the
//! largest one; interlacing supplies that: `λ2(H) ≤ λ1(H - v)` for every
//! vertex `v`, so any point above an upper bound for `λ1(H - v)` at which the
//! polynomial is negative lies strictly between `λ2(H)` and `λ1(H)`.

use super::exact::{char_poly, ExactRational, IntPoly, EXACT_MAX_VERTICES};
use super::perron::{perron_component, Csr, DEFAULT_MAX_ITERATIONS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Exact Collatz-Wielandt bounds of a positive vector on a connected graph.
pub(crate) fn exact_cw(a: &Csr, x: &[f64]) -> (ExactRational, ExactRational) {
    // every finite double is m * 2^e; scale to a common power of two
    let parts: Vec<(BigInt, i64)> = x
        .iter()
        .map(|&v| {
            assert!(v > 0.0 && v.is_finite(), "Perron entries must be positive");
            let r = ExactRational::from_f64(v).expect("finite");
            let den = r.denom();
            let shift = den.bits() as i64 - 1;
            (r.numer().clone(), shift)
        })
        .collect();
    let max_shift = parts.iter().map(|p| p.1).max().unwrap_or(0);
    let xs: Vec<BigInt> = parts
        .into_iter()
        .map(|(num, shift)| num << ((max_shift - shift) as usize))
        .collect();
    let mut best_lo: Option<(BigInt, usize)> = None;
    let mut best_hi: Option<(BigInt, usize)> = None;
    for i in 0..a.len() {
        let s: BigInt = a
            .row(i)
            .iter()
            .fold(BigInt::zero(), |acc, &j| acc + &xs[j as usize]);
        // compare s / xs[i] against the running extremes by cross multiplication
        let below = |(bs, bi): &(BigInt, usize)| &s * &xs[*bi] < bs * &xs[i];
        let above = |(bs, bi): &(BigInt, usize)| &s * &xs[*bi] > bs * &xs[i];
        if best_lo.as_ref().is_none_or(below) {
            best_lo = Some((s.clone(), i));
        }
        if best_hi.as_ref().is_none_or(above) {
            best_hi = Some((s, i));
        }
    }
    let (ls, li) = best_lo.expect("non-empty component");
    let (hs, hi) = best_hi.expect("non-empty component");
    (
        ExactRational::new(ls, xs[li].clone()),
        ExactRational::new(hs, xs[hi].clone()),
    )
}

/// A connected component with a floating Perron vector and exact bounds.
pub(crate) struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl Component {
    pub fn new(g: &Graph, vertices: Vec<usize>, tol: f64) -> Self {
        let csr = Csr::induced(g, &vertices);
        let res = perron_component(&csr, tol, DEFAULT_MAX_ITERATIONS);
        let (lo, hi) = if vertices.len() == 1 {
            (
                ExactRational::from_integer(0),
                ExactRational::from_integer(0),
            )
        } else {
            exact_cw(&csr, &res.vector)
        };
        let mut graph = g.induced(&vertices);
        graph.clear_labels();
        Component {
            vertices,
            graph,
            vector: res.vector,
            iterations: res.iterations,
            converged: res.converged,
            lo,
            hi,
        }
    }
}

pub(crate) fn components(g: &Graph, tol: f64) -> Vec<Component> {
    g.components()
        .into_iter()
        .map(|c| Component::new(g, c, tol))
        .collect()
}

/// Enclosure `(lo, hi]` of `λ1` in which `λ1` is the only root of the
/// component's characteristic polynomial, or an exact root when `lo == hi`.
pub(crate) struct Isolated {
    pub lo: ExactRational,
    pub hi: ExactRational,
    pub poly: IntPoly,
}

fn exact_cap(n: usize) -> Result<()> {
    if n > EXACT_MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: EXACT_MAX_VERTICES,
            what: "exact oracle",
        });
    }
    Ok(())
}

/// Upper bound for `λ1(H - v)`.
fn deleted_upper_bound(h: &Graph, v: usize) -> Option<ExactRational> {
    let (rest, _) = h.remove_vertices(&[v]);
    components(&rest, 1e-13).into_iter().map(|c| c.hi).max()
}

pub(crate) fn isolate(c: &Component) -> Result<Isolated> {
    exact_cap(c.graph.n())?;
    let poly = char_poly(&c.graph)?;
    if c.lo == c.hi || c.graph.n() == 1 {
        return Ok(Isolated {
            lo: c.lo.clone(),
            hi: c.hi.clone(),
            poly,
        });
    }
    let v = c
        .vector
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .expect("non-empty");
    let bound = deleted_upper_bound(&c.graph, v).expect("component has at least two vertices");
    let lower = if bound > c.lo {
        bound.clone()
    } else {
        c.lo.clone()
    };
    match poly.sign_at(&lower) {
        Ordering::Less => Ok(Isolated {
            lo: lower,
            hi: c.hi.clone(),
            poly,
        }),
        // lower is above λ2, so a root there is λ1 itself
        Ordering::Equal if lower > bound => Ok(Isolated {
            lo: lower.clone(),
            hi: lower,
            poly,
        }),
        _ => Err(Error::Undecided(format!(
            "could not separate the two largest eigenvalues of a {}-vertex component",
            c.graph.n()
        ))),
    }
}

/// Narrows an isolating enclosure to width at most `width`.
pub(crate) fn bisect(iso: &mut Isolated, width: &ExactRational) {
    while &iso.hi - &iso.lo > *width {
        let m = iso.lo.midpoint(&iso.hi);
        match iso.poly.sign_at(&m) {
            Ordering::Less => iso.lo = m,
            Ordering::Greater => iso.hi = m,
            Ordering::Equal => {
                iso.lo = m.clone();
                iso.hi = m;
            }
        }
    }
}

/// Exact rational no larger than the decimal `w` (positive, finite).
pub(crate) fn width_from_f64(w: f64) -> ExactRational {
    assert!(w > 0.0 && w.is_finite(), "width must be positive");
    let r = ExactRational::from_f64(w).expect("finite");
    if r.is_zero() {
        ExactRational::new(BigInt::one(), BigInt::one() << 200)
    } else {
        r
    }
}
