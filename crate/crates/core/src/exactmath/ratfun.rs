use super::{ExactError, PolyK, Q};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function in `k`: numerator over a monic denominator, coprime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunK {
    num: PolyK,
    den: PolyK,
}

impl RatFunK {
    pub fn new(num: PolyK, den: PolyK) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = PolyK::gcd(&num, &den);
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        let l = d.leading().recip();
        Ok(RatFunK {
            num: n.scale(&l),
            den: d.scale(&l),
        })
    }

    pub fn zero() -> Self {
        RatFunK {
            num: PolyK::zero(),
            den: PolyK::one(),
        }
    }

    pub fn from_poly(p: &PolyK) -> Self {
        RatFunK {
            num: p.clone(),
            den: PolyK::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(&PolyK::constant(c))
    }

    pub fn numer(&self) -> &PolyK {
        &self.num
    }

    pub fn denom(&self) -> &PolyK {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_defined_at(&self, x: &Q) -> bool {
        !self.den.eval(x).is_zero()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<Q> {
        (self.num.degree() == 0 && self.den.degree() == 0)
            .then(|| self.num.coeff(0) / self.den.coeff(0))
    }

    /// Polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<PolyK> {
        (self.den.degree() == 0 && self.den.coeff(0).is_one()).then(|| self.num.clone())
    }
}

impl fmt::Display for RatFunK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunK {
    type Output = RatFunK;
    fn add(self, o: &RatFunK) -> RatFunK {
        RatFunK::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }
}

impl Sub for &RatFunK {
    type Output = RatFunK;
    fn sub(self, o: &RatFunK) -> RatFunK {
        RatFunK::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }
}

impl Mul for &RatFunK {
    type Output = RatFunK;
    fn mul(self, o: &RatFunK) -> RatFunK {
        RatFunK::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Div for &RatFunK {
    type Output = Result<RatFunK, ExactError>;
    fn div(self, o: &RatFunK) -> Result<RatFunK, ExactError> {
        RatFunK::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RatFunK {
    type Output = RatFunK;
    fn neg(self) -> RatFunK {
        RatFunK {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunK {
    type Output = RatFunK;
    fn add(self, o: RatFunK) -> RatFunK {
        &self + &o
    }
}

impl Sub for RatFunK {
    type Output = RatFunK;
    fn sub(self, o: RatFunK) -> RatFunK {
        &self - &o
    }
}

impl Mul for RatFunK {
    type Output = RatFunK;
    fn mul(self, o: RatFunK) -> RatFunK {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{q, qi};

    #[test]
    fn normalizes_common_factor_and_sign() {
        let a = PolyK::linear(qi(1));
        let b = PolyK::linear(qi(2));
        let r = RatFunK::new(&a * &b, (&a * &PolyK::constant(qi(-2))).clone()).unwrap();
        assert_eq!(r.numer(), &b.scale(&q(-1, 2)));
        assert_eq!(r.denom(), &PolyK::one());
        assert_eq!(r.as_poly(), Some(b.scale(&q(-1, 2))));
    }

    #[test]
    fn poles_are_undefined() {
        let r = RatFunK::new(PolyK::k(), PolyK::linear(qi(3))).unwrap();
        assert_eq!(r.eval(&qi(-3)), None);
        assert_eq!(r.eval(&qi(1)), Some(q(1, 4)));
    }
}
