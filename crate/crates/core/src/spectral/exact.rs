//! Exact integer and rational arithmetic for spectral questions: determinant
//! signs by fraction-free elimination, characteristic polynomials, and
//! polynomial gcd over the rationals.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

/// Largest graph the exact determinant and characteristic-polynomial routines accept.
pub const EXACT_MAX_VERTICES: usize = 64;

/// Reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        ExactRational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    /// The exact value of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactRational)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Largest `m / 2^bits` not exceeding `self`.
    pub fn floor_dyadic(&self, bits: u32) -> Self {
        let scaled = self.0.clone() * BigRational::from_integer(BigInt::one() << bits);
        ExactRational(BigRational::new(
            scaled.floor().to_integer(),
            BigInt::one() << bits,
        ))
    }

    /// Smallest `m / 2^bits` not below `self`.
    pub fn ceil_dyadic(&self, bits: u32) -> Self {
        let scaled = self.0.clone() * BigRational::from_integer(BigInt::one() << bits);
        ExactRational(BigRational::new(
            scaled.ceil().to_integer(),
            BigInt::one() << bits,
        ))
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        ExactRational(
            (self.0.clone() + other.0.clone()) / BigRational::from_integer(BigInt::from(2)),
        )
    }

    pub fn square(&self) -> Self {
        ExactRational(self.0.clone() * self.0.clone())
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from_integer(v)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
        impl $tr<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);
forward_op!(Div, div);

/// Prints `p/q`, or `p` for integers.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl std::str::FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(ExactRational::new(parse(p)?, q))
            }
            None => Ok(ExactRational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_exact_cap(n: usize) -> Result<()> {
    if n > EXACT_MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: EXACT_MAX_VERTICES,
            what: "exact oracle",
        });
    }
    Ok(())
}

/// Sign of the determinant of an integer matrix, by Bareiss elimination.
pub fn det_sign(mut m: Vec<Vec<BigInt>>) -> Ordering {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ordering::Equal;
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let s = m[n - 1][n - 1].sign();
    let ord = match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    };
    if negate {
        ord.reverse()
    } else {
        ord
    }
}

/// Exact sign of `det(xI - A(g))`.
pub fn char_poly_sign(g: &Graph, x: &ExactRational) -> Result<Ordering> {
    let n = g.n();
    check_exact_cap(n)?;
    if n == 0 {
        return Ok(Ordering::Greater);
    }
    // det(xI - A) = det(pI - qA) / q^n with q > 0
    let p = x.numer();
    let q = x.denom();
    let neg_q = -q.clone();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        p.clone()
                    } else if g.has_edge(i, j) {
                        neg_q.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(det_sign(m))
}

/// Integer polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn trim(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Sign of the polynomial at `x`.
    pub fn sign_at(&self, x: &ExactRational) -> Ordering {
        // sum c_i p^i q^(d-i) has the sign of q^d f(p/q)
        let p = x.numer();
        let q = x.denom();
        let d = self.degree();
        let mut total = BigInt::zero();
        let mut ppow = BigInt::one();
        let mut qpows = Vec::with_capacity(d + 1);
        let mut qp = BigInt::one();
        for _ in 0..=d {
            qpows.push(qp.clone());
            qp *= q;
        }
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                total += c * &ppow * &qpows[d - i];
            }
            ppow *= p;
        }
        total.sign().into_ordering()
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive(self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self;
        }
        let mut out = IntPoly(self.0.into_iter().map(|x| x / &c).collect());
        if out.0.last().is_some_and(|l| l.is_negative()) {
            out.0.iter_mut().for_each(|x| *x = -x.clone());
        }
        out
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &IntPoly) -> IntPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.0[dd].clone();
        while r.len() > dd && !(r.len() == 1 && r[0].is_zero()) {
            let rd = r.len() - 1;
            if rd < dd {
                break;
            }
            let lr = r[rd].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let shift = rd - dd;
            for (i, c) in d.0.iter().enumerate() {
                r[i + shift] -= &lr * c;
            }
            r.pop();
            while r.len() > 1 && r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly(r).trim()
    }

    /// Primitive gcd over the rationals, by primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.clone().trim().primitive();
        let mut b = other.clone().trim().primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        let mut a = a.primitive();
        if a.0.last().is_some_and(|l| l.is_negative()) {
            a.0.iter_mut().for_each(|x| *x = -x.clone());
        }
        a
    }
}

trait SignOrdering {
    fn into_ordering(self) -> Ordering;
}

impl SignOrdering for Sign {
    fn into_ordering(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// `det(xI - A(g))` by Faddeev-LeVerrier over the integers.
pub fn char_poly(g: &Graph) -> Result<IntPoly> {
    let n = g.n();
    check_exact_cap(n)?;
    let nbrs: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for &j in &nbrs[i] {
                for (t, v) in am[i].iter_mut().zip(&m[j]) {
                    if !v.is_zero() {
                        *t += v;
                    }
                }
            }
        }
        let c_prev = coeffs[n - k + 1].clone();
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        m = am;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for &j in &nbrs[i] {
                tr += &m[j][i];
            }
        }
        let (quot, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        coeffs[n - k] = quot;
    }
    Ok(IntPoly(coeffs))
}
