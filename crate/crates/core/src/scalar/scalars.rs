//! Coefficient abstraction shared by the generic-q and root-of-unity layers.
//!
//! All PBW machinery is generic over a scalar type `C` together with a
//! context implementing [`ScalarOps<C>`]; the context supplies the field
//! operations and the q-structure (powers of v = q^{1/2}). Two contexts are
//! provided: [`GenericQ`] over [`RatFunc`] and [`RootOfUnity`] over
//! [`Cyclotomic`] at a fixed odd l.

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::ratfunc::RatFunc;
use super::{q_from, Q};
use std::fmt::{Debug, Display};
use std::sync::Arc;

/// Data bound for coefficients.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
}

impl Scalar for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Scalar for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

/// Field operations plus the q-structure for a scalar type.
pub trait ScalarOps<C: Scalar>: Send + Sync {
    fn zero(&self) -> C;
    fn one(&self) -> C;
    fn add(&self, a: &C, b: &C) -> C;
    fn sub(&self, a: &C, b: &C) -> C;
    fn neg(&self, a: &C) -> C;
    fn mul(&self, a: &C, b: &C) -> C;
    /// Multiplicative inverse; None for zero.
    fn inv(&self, a: &C) -> Option<C>;
    fn from_ratio(&self, num: i64, den: i64) -> C;
    /// v^k where v = q^{1/2}.
    fn v_pow(&self, k: i64) -> C;

    fn from_i64(&self, n: i64) -> C {
        self.from_ratio(n, 1)
    }
    /// q^k.
    fn q_pow(&self, k: i64) -> C {
        self.v_pow(2 * k)
    }
    /// \[n\]_q = (q^n - q^{-n})/(q - q^{-1}).
    fn q_int(&self, n: i64) -> C {
        let sign = if n < 0 { -1 } else { 1 };
        let n = n.abs();
        let mut acc = self.zero();
        for j in 0..n {
            acc = self.add(&acc, &self.q_pow(n - 1 - 2 * j));
        }
        if sign < 0 {
            acc = self.neg(&acc);
        }
        acc
    }
    /// q - q^{-1}.
    fn q_minus_qinv(&self) -> C {
        self.sub(&self.q_pow(1), &self.q_pow(-1))
    }
    /// 1/(q - q^{-1}); always defined in both layers (ε is primitive of odd
    /// order l ≥ 3, so ε ≠ ±1).
    fn q_minus_qinv_inv(&self) -> C {
        self.inv(&self.q_minus_qinv())
            .expect("q - q^{-1} must be invertible")
    }
    fn scale_rational(&self, a: &C, c: &Q) -> C;
}

/// Generic-q coefficients: the field Q(v).
#[derive(Clone, Copy, Debug, Default)]
pub struct GenericQ;

impl ScalarOps<RatFunc> for GenericQ {
    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn one(&self) -> RatFunc {
        RatFunc::one()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        a.inv()
    }
    fn from_ratio(&self, num: i64, den: i64) -> RatFunc {
        RatFunc::from_rational(q_from(num, den))
    }
    fn v_pow(&self, k: i64) -> RatFunc {
        RatFunc::v_pow(k)
    }
    fn scale_rational(&self, a: &RatFunc, c: &Q) -> RatFunc {
        a.scale(c)
    }
}

/// Root-of-unity coefficients: the cyclotomic field at 4l, with v mapped to
/// the fixed square root ε^{1/2} = ε^{(l+1)/2}.
#[derive(Clone)]
pub struct RootOfUnity {
    field: Arc<CyclotomicField>,
}

impl RootOfUnity {
    pub fn new(l: u32) -> Self {
        RootOfUnity {
            field: CyclotomicField::for_l(l),
        }
    }

    pub fn l(&self) -> u32 {
        self.field.l()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn epsilon(&self) -> Cyclotomic {
        self.field.epsilon()
    }
}

impl ScalarOps<Cyclotomic> for RootOfUnity {
    fn zero(&self) -> Cyclotomic {
        self.field.zero()
    }
    fn one(&self) -> Cyclotomic {
        self.field.one()
    }
    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.add(b)
    }
    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.sub(b)
    }
    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        a.neg()
    }
    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.mul(b)
    }
    fn inv(&self, a: &Cyclotomic) -> Option<Cyclotomic> {
        a.inv()
    }
    fn from_ratio(&self, num: i64, den: i64) -> Cyclotomic {
        self.field.from_rational(q_from(num, den))
    }
    fn v_pow(&self, k: i64) -> Cyclotomic {
        self.field.v_pow(k)
    }
    fn scale_rational(&self, a: &Cyclotomic, c: &Q) -> Cyclotomic {
        a.scale(c)
    }
}
