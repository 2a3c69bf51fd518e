//! Exact arithmetic: rationals, polynomials and rational functions in the
//! level variable `k`, rational root extraction, and small dense linear
//! algebra over the rationals.
//!
//! Nothing in this crate touches floating point.

pub mod linalg;
mod poly;
mod ratfun;

pub use poly::PolyK;
pub use ratfun::RatFunK;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Q = BigRational;

/// Alias kept for readability at API boundaries.
pub type RationalScalar = Q;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("cleared equation does not split over the rationals; residual factor {residual}")]
    IrrationalSolutions { roots: Vec<Q>, residual: PolyK },
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Renders as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerated around the slash).
pub fn parse_q(s: &str) -> Result<Q, ExactError> {
    let t = s.trim();
    let bad = || ExactError::BadRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Integer value if `x` is integral and fits in `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.denom().is_one() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Rational roots of `p` together with whether `p` splits into linear factors over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    /// Distinct roots in increasing order.
    pub roots: Vec<Q>,
    pub splits: bool,
    /// What is left after removing every rational linear factor (monic).
    pub residual: PolyK,
}

/// Exact rational roots by the rational-root theorem.
pub fn rational_roots(p: &PolyK) -> Result<RootSet, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut rest = p.monic();
    let mut roots: Vec<Q> = Vec::new();
    // factor out powers of k
    if rest.coeff(0).is_zero() {
        roots.push(Q::zero());
        while rest.degree() > 0 && rest.coeff(0).is_zero() {
            rest = rest.div_by_k();
        }
    }
    if rest.degree() > 0 {
        let ints = rest.integer_coefficients();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let mut cands: Vec<Q> = Vec::new();
        for a in &num_divs {
            for b in &den_divs {
                let c = Q::new(a.clone(), b.clone());
                if !cands.contains(&c) {
                    cands.push(c.clone());
                    cands.push(-c);
                }
            }
        }
        for c in cands {
            if rest.degree() == 0 {
                break;
            }
            let mut hit = false;
            while rest.degree() > 0 && rest.eval(&c).is_zero() {
                rest = rest.div_linear(&c);
                hit = true;
            }
            if hit {
                roots.push(c);
            }
        }
    }
    roots.sort();
    roots.dedup();
    let splits = rest.degree() == 0;
    Ok(RootSet {
        roots,
        splits,
        residual: rest,
    })
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// True iff `d` divides `p` exactly in ℚ[k].
pub fn poly_divides(d: &PolyK, p: &PolyK) -> Result<bool, ExactError> {
    let (_, r) = p.div_rem(d)?;
    Ok(r.is_zero())
}

/// Outcome of solving `lhs(k) = rhs(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solutions {
    /// Both sides are the same rational function.
    AllK,
    /// Finite solution set, increasing order.
    Finite(Vec<Q>),
}

/// All rational `k` with `lhs(k) = rhs(k)`, both sides defined, `k` not excluded.
pub fn ratfun_equal_solutions(
    lhs: &RatFunK,
    rhs: &RatFunK,
    excluded_poles: &[Q],
) -> Result<Solutions, ExactError> {
    let diff = lhs - rhs;
    if diff.is_zero() {
        return Ok(Solutions::AllK);
    }
    let rs = rational_roots(diff.numer())?;
    if !rs.splits {
        return Err(ExactError::IrrationalSolutions {
            roots: rs.roots,
            residual: rs.residual,
        });
    }
    let sols = rs
        .roots
        .into_iter()
        .filter(|r| lhs.is_defined_at(r) && rhs.is_defined_at(r) && !excluded_poles.contains(r))
        .collect();
    Ok(Solutions::Finite(sols))
}
