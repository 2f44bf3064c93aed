//! Spectral radius certificates.
//!
//! [`perron`] runs power iteration and reports floating Collatz-Wielandt
//! bounds. [`refine_certificate`] turns the same vector into an exact rational
//! enclosure and narrows it by sign bisection on the characteristic
//! polynomial. [`compare_spectral_radii`] decides orderings from exact
//! enclosures, falling back to polynomial identities when they never separate.

mod certify;
pub mod compare;
pub mod exact;
mod perron;

pub use compare::{
    compare_radius_with, compare_radius_with_root, compare_radius_with_sqrt,
    compare_spectral_radii, ordering_label, Comparison, Proof,
};
pub use exact::{char_poly, char_poly_sign, ExactRational, IntPoly, EXACT_MAX_VERTICES};

use crate::error::{Error, Result};
use crate::format::fmt_f64;
use crate::graph::Graph;
use certify::{bisect, components, isolate, width_from_f64};
use serde::Serialize;
use serde_json::{json, Value};

/// Default width of floating certificates.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Enclosure `[lambda_lo, lambda_hi]` of `λ(G)` with a positive witness vector.
#[derive(Clone, Debug, Serialize)]
pub struct PerronCertificate {
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    /// Positive, maximum entry 1 (per component for disconnected graphs).
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// Set when the enclosure comes from exact arithmetic.
    pub exact: bool,
    pub converged: bool,
    pub exact_lo: Option<ExactRational>,
    pub exact_hi: Option<ExactRational>,
}

impl PerronCertificate {
    pub fn width(&self) -> f64 {
        self.lambda_hi - self.lambda_lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lambda_lo + self.lambda_hi)
    }

    /// Report record with decimal-string endpoints; exact certificates also
    /// carry rational endpoints.
    pub fn to_record(&self) -> Value {
        let mut v = json!({
            "lambda_lo": fmt_f64(self.lambda_lo),
            "lambda_hi": fmt_f64(self.lambda_hi),
            "iterations": self.iterations,
            "exact": self.exact,
            "converged": self.converged,
        });
        if let (Some(lo), Some(hi)) = (&self.exact_lo, &self.exact_hi) {
            v["exact_lo"] = json!(lo.to_string());
            v["exact_hi"] = json!(hi.to_string());
        }
        v
    }
}

/// Floating certificate for `λ(g)`.
///
/// Each component is iterated on `A + I` from the all-ones vector until its
/// Collatz-Wielandt bounds are within `tol`. For disconnected graphs the
/// bounds are the maxima over components and the vector concatenates the
/// component vectors.
pub fn perron(g: &Graph, tol: f64) -> PerronCertificate {
    if g.n() == 0 {
        return PerronCertificate {
            lambda_lo: 0.0,
            lambda_hi: 0.0,
            vector: vec![],
            iterations: 0,
            exact: false,
            converged: true,
            exact_lo: None,
            exact_hi: None,
        };
    }
    let mut vector = vec![0.0; g.n()];
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut iterations = 0;
    let mut converged = true;
    for comp in g.components() {
        let csr = perron::Csr::induced(g, &comp);
        let r = perron::perron_component(&csr, tol, perron::DEFAULT_MAX_ITERATIONS);
        for (&v, &x) in comp.iter().zip(&r.vector) {
            vector[v] = x;
        }
        lo = lo.max(r.lo);
        hi = hi.max(r.hi);
        iterations = iterations.max(r.iterations);
        converged &= r.converged;
    }
    PerronCertificate {
        lambda_lo: lo,
        lambda_hi: hi,
        vector,
        iterations,
        exact: false,
        converged,
        exact_lo: None,
        exact_hi: None,
    }
}

/// Exact enclosure of `λ(g)` of width at most `target_width`.
///
/// The enclosure is first taken from exact Collatz-Wielandt quotients of the
/// floating Perron vector; components whose enclosure is still too wide are
/// bisected on their characteristic polynomial, which needs at most
/// [`EXACT_MAX_VERTICES`] vertices per component.
pub fn refine_certificate(g: &Graph, target_width: f64) -> Result<PerronCertificate> {
    if g.n() == 0 {
        return Err(Error::ParameterOutOfRange(
            "graph must have at least one vertex".into(),
        ));
    }
    let width = width_from_f64(target_width);
    let comps = components(g, DEFAULT_TOL);
    let max_lo = comps.iter().map(|c| c.lo.clone()).max().expect("non-empty");
    let mut lo = max_lo.clone();
    let mut hi: Option<ExactRational> = None;
    let mut vector = vec![0.0; g.n()];
    let mut iterations = 0;
    let mut converged = true;
    for c in &comps {
        for (&v, &x) in c.vertices.iter().zip(&c.vector) {
            vector[v] = x;
        }
        iterations = iterations.max(c.iterations);
        converged &= c.converged;
        if c.hi < max_lo {
            continue;
        }
        let (clo, chi) = if &c.hi - &c.lo <= width {
            (c.lo.clone(), c.hi.clone())
        } else {
            let mut iso = isolate(c)?;
            bisect(&mut iso, &width);
            (iso.lo, iso.hi)
        };
        if clo > lo {
            lo = clo;
        }
        if hi.as_ref().is_none_or(|h| chi > *h) {
            hi = Some(chi);
        }
    }
    let hi = hi.expect("at least one component reaches the maximum");
    Ok(PerronCertificate {
        lambda_lo: lo.to_f64(),
        lambda_hi: hi.to_f64(),
        vector,
        iterations,
        exact: true,
        converged,
        exact_lo: Some(lo),
        exact_hi: Some(hi),
    })
}

/// `2 Σ_{ij ∈ E} x_i x_j / Σ x_i²`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: x.len(),
        });
    }
    let norm: f64 = x.iter().map(|v| v * v).sum();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num: f64 = g.edges().map(|(u, v)| 2.0 * x[u] * x[v]).sum();
    Ok(num / norm)
}

/// Exact Collatz-Wielandt enclosure of `λ(g)` from a floating Perron vector.
/// Valid for any size; no polynomial work is done.
pub fn exact_enclosure(g: &Graph) -> Result<(ExactRational, ExactRational)> {
    if g.n() == 0 {
        return Err(Error::ParameterOutOfRange(
            "graph must have at least one vertex".into(),
        ));
    }
    let comps = components(g, DEFAULT_TOL);
    let lo = comps.iter().map(|c| c.lo.clone()).max().expect("non-empty");
    let hi = comps.iter().map(|c| c.hi.clone()).max().expect("non-empty");
    Ok((lo, hi))
}
