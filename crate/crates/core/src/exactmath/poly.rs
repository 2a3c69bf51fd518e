use super::{fmt_q, ExactError, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `k` with rational coefficients, lowest degree first,
/// never carrying trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyK {
    coeffs: Vec<Q>,
}

impl PolyK {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyK { coeffs }
    }

    pub fn zero() -> Self {
        PolyK { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// The variable `k`.
    pub fn k() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// `k + a`.
    pub fn linear(a: Q) -> Self {
        Self::new(vec![a, Q::one()])
    }

    /// `∏ (k - r)`.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(-r.clone()))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Same polynomial divided by its leading coefficient (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    /// Primitive integer coefficient vector proportional to `self`, positive leading term.
    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() {
            for x in ints.iter_mut() {
                *x = &*x / &g;
            }
        }
        if ints.last().is_some_and(|x| x.is_negative()) {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        ints
    }

    pub(crate) fn div_by_k(&self) -> Self {
        debug_assert!(self.coeff(0).is_zero());
        Self::new(self.coeffs[1..].to_vec())
    }

    /// Quotient by `k - r`, assuming `r` is a root.
    pub(crate) fn div_linear(&self, r: &Q) -> Self {
        let (qt, _) = self
            .div_rem(&Self::linear(-r.clone()))
            .expect("nonzero divisor");
        qt
    }

    pub fn div_rem(&self, d: &PolyK) -> Result<(PolyK, PolyK), ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lead_inv = d.leading().recip();
        if r.len() < d.coeffs.len() {
            return Ok((PolyK::zero(), self.clone()));
        }
        let mut qc = vec![Q::zero(); r.len() - dd];
        for i in (0..qc.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dj;
                }
            }
            qc[i] = c;
        }
        r.truncate(dd);
        Ok((PolyK::new(qc), PolyK::new(r)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &PolyK, b: &PolyK) -> PolyK {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Renders as a product of linear factors times a constant when it splits,
    /// otherwise in expanded form.
    pub fn render_factored(&self) -> String {
        if self.degree() == 0 {
            return self.to_string();
        }
        let Ok(rs) = super::rational_roots(self) else {
            return self.to_string();
        };
        if !rs.splits {
            return self.to_string();
        }
        let mut rest = self.clone();
        let mut parts = Vec::new();
        for r in rs.roots.iter().rev() {
            while rest.degree() > 0 && rest.eval(r).is_zero() {
                rest = rest.div_linear(r);
                let f = PolyK::linear(-r.clone());
                parts.push(format!("({f})"));
            }
        }
        let c = rest.leading();
        let lead = if c.is_one() {
            String::new()
        } else if c == -Q::one() {
            "-".to_string()
        } else {
            format!("{} ", fmt_q(&c))
        };
        format!("{lead}{}", parts.join(""))
    }
}

impl fmt::Display for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mon = match i {
                0 => String::new(),
                1 => "k".to_string(),
                _ => format!("k^{i}"),
            };
            if i == 0 {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{} {mon}", fmt_q(&a))?;
            }
        }
        Ok(())
    }
}

impl Add for &PolyK {
    type Output = PolyK;
    fn add(self, o: &PolyK) -> PolyK {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyK::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &PolyK {
    type Output = PolyK;
    fn sub(self, o: &PolyK) -> PolyK {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyK::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &PolyK {
    type Output = PolyK;
    fn mul(self, o: &PolyK) -> PolyK {
        if self.is_zero() || o.is_zero() {
            return PolyK::zero();
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        PolyK::new(c)
    }
}

impl Neg for &PolyK {
    type Output = PolyK;
    fn neg(self) -> PolyK {
        PolyK::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyK {
            type Output = PolyK;
            fn $m(self, o: PolyK) -> PolyK {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{q, qi};

    #[test]
    fn display_forms() {
        let p = PolyK::new(vec![q(3, 2), q(5, 2), qi(1)]);
        assert_eq!(p.to_string(), "k^2 + 5/2 k + 3/2");
        assert_eq!(PolyK::new(vec![qi(-1), qi(-2)]).to_string(), "-2 k - 1");
        assert_eq!(p.render_factored(), "(k + 1)(k + 3/2)");
        assert_eq!(PolyK::new(vec![qi(0), qi(2)]).render_factored(), "2 (k)");
    }

    #[test]
    fn division_identity() {
        let a = PolyK::new(vec![qi(1), qi(2), qi(3), qi(4)]);
        let b = PolyK::new(vec![q(1, 2), qi(-1)]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn gcd_of_products() {
        let x = PolyK::linear(qi(1));
        let y = PolyK::linear(q(1, 3));
        let z = PolyK::linear(qi(-2));
        let g = PolyK::gcd(&(&x * &y), &(&(&y * &z).scale(&qi(5))));
        assert_eq!(g, y);
    }
}
