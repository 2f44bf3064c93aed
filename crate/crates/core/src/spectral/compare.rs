//! Certified comparison of spectral radii.

use super::certify::{bisect, components, isolate, Component, Isolated};
use super::exact::{char_poly, ExactRational, IntPoly, EXACT_MAX_VERTICES};
use super::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::cmp::Ordering;

/// How an ordering was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Proof {
    /// Disjoint exact enclosures.
    Separated,
    /// Same adjacency matrix.
    Identical,
    /// Identical characteristic polynomials.
    Cospectral,
    /// The dominant components' characteristic polynomials share a root that
    /// lies in both isolating enclosures.
    SharedRoot,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    pub proof: Proof,
    /// Exact enclosure of `λ(g1)` used in the decision.
    pub a: (ExactRational, ExactRational),
    pub b: (ExactRational, ExactRational),
    /// Certified lower bound on `|λ(g1) - λ(g2)|` for strict outcomes.
    pub gap: Option<ExactRational>,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(ordering_label(*o))
}

pub fn ordering_label(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

/// Bisection widths tried in turn before giving up; the last is the hard cap.
const WIDTHS: [i32; 9] = [12, 18, 24, 30, 40, 50, 60, 80, 100];

fn ten_pow_neg(e: i32) -> ExactRational {
    ExactRational::new(1, num_bigint::BigInt::from(10).pow(e as u32))
}

fn separated(
    a: &(ExactRational, ExactRational),
    b: &(ExactRational, ExactRational),
) -> Option<(Ordering, ExactRational)> {
    if a.0 > b.1 {
        Some((Ordering::Greater, &a.0 - &b.1))
    } else if b.0 > a.1 {
        Some((Ordering::Less, &b.0 - &a.1))
    } else {
        None
    }
}

fn compare_components(c1: &Component, c2: &Component) -> Result<Comparison> {
    let ia = (c1.lo.clone(), c1.hi.clone());
    let ib = (c2.lo.clone(), c2.hi.clone());
    if c1.graph == c2.graph {
        return Ok(Comparison {
            ordering: Ordering::Equal,
            proof: Proof::Identical,
            a: ia,
            b: ib,
            gap: None,
        });
    }
    if let Some((ordering, gap)) = separated(&ia, &ib) {
        return Ok(Comparison {
            ordering,
            proof: Proof::Separated,
            a: ia,
            b: ib,
            gap: Some(gap),
        });
    }
    let mut s1 = isolate(c1)?;
    let mut s2 = isolate(c2)?;
    if s1.poly == s2.poly {
        return Ok(Comparison {
            ordering: Ordering::Equal,
            proof: Proof::Cospectral,
            a: (s1.lo, s1.hi),
            b: (s2.lo, s2.hi),
            gap: None,
        });
    }
    if shares_root(&s1, &s2) {
        return Ok(Comparison {
            ordering: Ordering::Equal,
            proof: Proof::SharedRoot,
            a: (s1.lo, s1.hi),
            b: (s2.lo, s2.hi),
            gap: None,
        });
    }
    for e in WIDTHS {
        let w = ten_pow_neg(e);
        bisect(&mut s1, &w);
        bisect(&mut s2, &w);
        let a = (s1.lo.clone(), s1.hi.clone());
        let b = (s2.lo.clone(), s2.hi.clone());
        if let Some((ordering, gap)) = separated(&a, &b) {
            return Ok(Comparison {
                ordering,
                proof: Proof::Separated,
                a,
                b,
                gap: Some(gap),
            });
        }
    }
    Err(Error::Undecided(format!(
        "enclosures still overlap at width 1e-{}",
        WIDTHS[WIDTHS.len() - 1]
    )))
}

/// Whether both isolated largest roots coincide.
fn shares_root(s1: &Isolated, s2: &Isolated) -> bool {
    let h = s1.poly.gcd(&s2.poly);
    if h.degree() == 0 {
        return false;
    }
    let lo = (&s1.lo).max(&s2.lo);
    let hi = (&s1.hi).min(&s2.hi);
    if lo > hi {
        return false;
    }
    // each enclosure holds exactly one root of its polynomial, so a root of
    // the common factor inside the overlap is the largest root of both
    let a = h.sign_at(lo);
    let b = h.sign_at(hi);
    a == Ordering::Equal || b == Ordering::Equal || a != b
}

/// The component whose largest eigenvalue is `λ(g)`.
fn dominant(g: &Graph) -> Result<Component> {
    let mut comps = components(g, DEFAULT_TOL);
    let max_lo = comps
        .iter()
        .map(|c| c.lo.clone())
        .max()
        .expect("non-empty graph");
    comps.retain(|c| c.hi >= max_lo);
    let mut best = comps.remove(0);
    for c in comps {
        if compare_components(&c, &best)?.ordering == Ordering::Greater {
            best = c;
        }
    }
    Ok(best)
}

/// Certified ordering of `λ(g1)` against `λ(g2)`.
pub fn compare_spectral_radii(g1: &Graph, g2: &Graph) -> Result<Comparison> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::ParameterOutOfRange(
            "graphs must have at least one vertex".into(),
        ));
    }
    if g1 == g2 {
        let c = dominant(g1)?;
        let i = (c.lo.clone(), c.hi.clone());
        return Ok(Comparison {
            ordering: Ordering::Equal,
            proof: Proof::Identical,
            a: i.clone(),
            b: i,
            gap: None,
        });
    }
    let d1 = dominant(g1)?;
    let d2 = dominant(g2)?;
    let ia = (d1.lo.clone(), d1.hi.clone());
    let ib = (d2.lo.clone(), d2.hi.clone());
    if separated(&ia, &ib).is_none()
        && g1.n() == g2.n()
        && g1.n() <= EXACT_MAX_VERTICES
        && char_poly(g1)? == char_poly(g2)?
    {
        return Ok(Comparison {
            ordering: Ordering::Equal,
            proof: Proof::Cospectral,
            a: ia,
            b: ib,
            gap: None,
        });
    }
    compare_components(&d1, &d2)
}

/// Ordering of a component's largest eigenvalue against the root `r`.
fn component_vs_root(c: &Component, q: &IntPoly, factor_root: bool) -> Result<Ordering> {
    // for x >= 0 the sign of q(x) is the ordering of x against r
    if c.graph.n() == 1 || c.lo == c.hi {
        return Ok(q.sign_at(&c.lo));
    }
    if q.sign_at(&c.hi) == Ordering::Less {
        return Ok(Ordering::Less);
    }
    if q.sign_at(&c.lo) == Ordering::Greater {
        return Ok(Ordering::Greater);
    }
    let mut iso = isolate(c)?;
    if factor_root {
        let h = iso.poly.gcd(q);
        if h.degree() > 0 {
            let (a, b) = (h.sign_at(&iso.lo), h.sign_at(&iso.hi));
            let r_inside =
                q.sign_at(&iso.lo) == Ordering::Less && q.sign_at(&iso.hi) != Ordering::Less;
            if r_inside && (b == Ordering::Equal || a != b) {
                return Ok(Ordering::Equal);
            }
        }
    }
    for _ in 0..MAX_ROOT_BISECTIONS {
        if iso.lo == iso.hi {
            return Ok(q.sign_at(&iso.lo));
        }
        if q.sign_at(&iso.hi) == Ordering::Less {
            return Ok(Ordering::Less);
        }
        if q.sign_at(&iso.lo) != Ordering::Less {
            return Ok(Ordering::Greater);
        }
        let half = (&iso.hi - &iso.lo) * ExactRational::new(1, 2);
        bisect(&mut iso, &half);
    }
    Err(Error::Undecided(
        "spectral radius too close to the comparison root".into(),
    ))
}

const MAX_ROOT_BISECTIONS: usize = 400;

/// Certified ordering of `λ(g)` against `r`, the unique non-negative root of
/// `q`. `q` must be negative on `[0, r)` and positive beyond `r`; linear
/// polynomials with positive slope and quadratics with a positive leading
/// coefficient and a non-positive constant term qualify.
pub fn compare_radius_with_root(g: &Graph, q: &IntPoly) -> Result<Ordering> {
    if g.n() == 0 {
        return Err(Error::ParameterOutOfRange(
            "graph must have at least one vertex".into(),
        ));
    }
    let factor_root = q.degree() > 0;
    let mut best = Ordering::Less;
    for c in components(g, DEFAULT_TOL) {
        best = best.max(component_vs_root(&c, q, factor_root)?);
        if best == Ordering::Greater {
            break;
        }
    }
    Ok(best)
}

/// `λ(g)` against the rational `x`.
pub fn compare_radius_with(g: &Graph, x: &ExactRational) -> Result<Ordering> {
    let q = IntPoly(vec![-x.numer().clone(), x.denom().clone()]);
    compare_radius_with_root(g, &q)
}

/// `λ(g)` against `sqrt(m)`.
pub fn compare_radius_with_sqrt(g: &Graph, m: u64) -> Result<Ordering> {
    let q = IntPoly(vec![-num_bigint::BigInt::from(m), 0.into(), 1.into()]);
    compare_radius_with_root(g, &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, PartChoice};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn kab(a: usize, b: usize) -> Graph {
        build_family(&FamilySpec::CompleteBipartite { a, b }).unwrap()
    }

    #[test]
    fn k23_beats_k22() {
        let c = compare_spectral_radii(&kab(2, 3), &kab(2, 2)).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
        assert_eq!(c.proof, Proof::Separated);
        assert!(c.gap.unwrap().signum() > 0);
    }

    #[test]
    fn identity_is_eq() {
        let g = cycle(7);
        let c = compare_spectral_radii(&g, &g).unwrap();
        assert_eq!(c.ordering, Ordering::Equal);
        assert_eq!(c.proof, Proof::Identical);
    }

    #[test]
    fn family_order_sixteen() {
        let a = build_family(&FamilySpec::CycleAttachedTuran {
            n: 16,
            l: 1,
            part: PartChoice::Smaller,
        })
        .unwrap();
        let b = build_family(&FamilySpec::CycleAttachedTuran {
            n: 16,
            l: 2,
            part: PartChoice::Smaller,
        })
        .unwrap();
        assert_eq!(
            compare_spectral_radii(&a, &b).unwrap().ordering,
            Ordering::Greater
        );
        assert_eq!(
            compare_spectral_radii(&b, &a).unwrap().ordering,
            Ordering::Less
        );
    }

    #[test]
    fn equal_radius_different_spectra() {
        // λ(C_5) = λ(K_{1,4}) = 2 with different characteristic polynomials
        let c = compare_spectral_radii(&cycle(5), &kab(1, 4)).unwrap();
        assert_eq!(c.ordering, Ordering::Equal);
    }

    #[test]
    fn cospectral_pair() {
        // K_{1,4} and C_4 + K_1 share the spectrum {±2, 0, 0, 0}
        let mut c4k1 = Graph::empty(5);
        for i in 0..4 {
            c4k1.add_edge(i, (i + 1) % 4);
        }
        let c = compare_spectral_radii(&kab(1, 4), &c4k1).unwrap();
        assert_eq!(c.ordering, Ordering::Equal);
        assert_eq!(c.proof, Proof::Cospectral);
    }

    #[test]
    fn disconnected_takes_the_max() {
        let mut g = Graph::empty(7);
        for i in 0..3 {
            g.add_edge(i, (i + 1) % 3);
        }
        g.add_edge(3, 4);
        g.add_edge(5, 6);
        let c = compare_spectral_radii(&g, &cycle(9)).unwrap();
        assert_eq!(c.ordering, Ordering::Equal);
        let c = compare_spectral_radii(&g, &Graph::complete(2)).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
    }

    #[test]
    fn close_radii_need_bisection() {
        // a single added edge far from the dense core barely moves λ
        let base = build_family(&FamilySpec::CycleAttachedTuran {
            n: 20,
            l: 3,
            part: PartChoice::Smaller,
        })
        .unwrap();
        let mut g = base.clone();
        let n = g.n();
        g.add_edge(n - 3, n - 1);
        let c = compare_spectral_radii(&g, &base).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
    }

    #[test]
    fn radius_against_roots() {
        // λ(K_{2,3}) = sqrt(6), λ(C_5) = 2
        assert_eq!(
            compare_radius_with_sqrt(&kab(2, 3), 6).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_radius_with_sqrt(&kab(2, 3), 7).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_radius_with_sqrt(&kab(2, 3), 5).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_radius_with(&cycle(5), &ExactRational::from_integer(2)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_radius_with(&cycle(5), &ExactRational::new(199, 100)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_radius_with(&Graph::empty(3), &ExactRational::from_integer(0)).unwrap(),
            Ordering::Equal
        );
        // golden ratio is the positive root of x^2 - x - 1, and λ(P_4)
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let q = IntPoly(vec![(-1).into(), (-1).into(), 1.into()]);
        assert_eq!(compare_radius_with_root(&p4, &q).unwrap(), Ordering::Equal);
        assert_eq!(
            compare_radius_with_root(&cycle(4), &q).unwrap(),
            Ordering::Greater
        );
    }
}
