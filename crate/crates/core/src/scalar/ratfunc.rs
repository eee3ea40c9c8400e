//! Reduced rational functions in v = q^{1/2} over the rationals.

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::Q;
use num::One;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// The reduced denominator vanishes at the requested root of unity. This
    /// signals that the element does not lie in the integral form being
    /// specialized.
    #[error("pole at specialization: denominator {0} vanishes at the root of unity")]
    PoleAtSpecialization(String),
}

/// A rational function num/den in v, stored gcd-reduced with the denominator
/// normalized to lowest exponent 0 and lowest coefficient 1, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduced(num, den)
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: LaurentPoly::one(),
            };
        }
        let (num, den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        // Absorb the denominator's unit c * v^k into the numerator.
        let e = den.min_exp().unwrap();
        let c = den.coeff(e);
        if e == 0 && c.is_one() {
            return RatFunc { num, den };
        }
        let num = num.shift(-e).scale(&c.recip());
        let den = den.shift(-e).scale(&c.recip());
        RatFunc { num, den }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_rational(c: Q) -> Self {
        Self::from_laurent(LaurentPoly::from_rational(c))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_i64(c))
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::v_pow(k))
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    /// \[n\]_q as a rational function (it is in fact Laurent).
    pub fn q_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_int(n))
    }

    /// q - q^{-1}.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPoly::q_pow(1).sub(&LaurentPoly::q_pow(-1)))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the reduced denominator is 1 (the value is Laurent).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent numerator when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::reduced(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self
            .num
            .mul(&rhs.den)
            .add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Cross-reduce before multiplying to keep degrees small.
        let a = Self::reduced(self.num.clone(), rhs.den.clone());
        let b = Self::reduced(rhs.num.clone(), self.den.clone());
        RatFunc {
            num: a.num.mul(&b.num),
            den: a.den.mul(&b.den),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: i32) -> Self {
        if n < 0 {
            return self.inv().expect("zero to negative power").pow(-n);
        }
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at v = `point`, exactly. Errors when the reduced denominator
    /// vanishes there.
    pub fn specialize(&self, point: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
        let num = eval_laurent(&self.num, point);
        if self.den.is_one() {
            return Ok(num);
        }
        let den = eval_laurent(&self.den, point);
        match den.inv() {
            Some(d) => Ok(num.mul(&d)),
            None => Err(ScalarError::PoleAtSpecialization(self.den.to_string())),
        }
    }
}

fn eval_laurent(p: &LaurentPoly, point: &Cyclotomic) -> Cyclotomic {
    let field = point.field();
    let mut acc = field.zero();
    for (e, c) in p.terms() {
        acc = acc.add(&point.pow(*e).scale(c));
    }
    acc
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q_pow(1)
    }

    #[test]
    fn forced_cancellation() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let f = RatFunc::new(
            LaurentPoly::q_pow(2).sub(&LaurentPoly::one()),
            LaurentPoly::q_pow(1).sub(&LaurentPoly::one()),
        );
        assert_eq!(f, q().add(&RatFunc::one()));
        assert!(f.is_laurent());
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(LaurentPoly::v_pow(3), LaurentPoly::q_int(2));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
        assert!(a.sub(&a).is_zero());
        // structural equality of differently-built equal values
        let c = RatFunc::new(
            LaurentPoly::v_pow(5).scale(&crate::scalar::q_from(2, 1)),
            LaurentPoly::q_int(2).mul(&LaurentPoly::v_pow(2)).scale(&crate::scalar::q_from(2, 1)),
        );
        assert_eq!(a, c);
    }

    #[test]
    fn q_ratio_reduces_to_one() {
        let h = RatFunc::q_pow(3).sub(&RatFunc::q_pow(-3));
        assert!(h.div(&h).is_one());
    }
}
