//! Laurent polynomials in v = q^{1/2} with rational coefficients.

use super::Q;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial in the variable v over Q.
///
/// Stored as a map from (possibly negative) exponent to a nonzero rational
/// coefficient. The map never contains zero coefficients, so equality is
/// structural. The symbol q of the quantum group is v^2, so every expression
/// in q and q^{1/2} embeds.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    /// c * v^k; the zero polynomial when c = 0.
    pub fn monomial(exp: i64, coeff: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_rational(c: Q) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_rational(Q::from_integer(c.into()))
    }

    /// v^k.
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(k, Q::one())
    }

    /// q^k = v^{2k}.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    /// The quantum integer \[n\]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}.
    pub fn q_int(n: i64) -> Self {
        let mut out = Self::zero();
        let sign = if n < 0 { -Q::one() } else { Q::one() };
        let n = n.abs();
        for j in 0..n {
            out = out.add(&Self::monomial(2 * (n - 1 - 2 * j), sign.clone()));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent with nonzero coefficient, or None for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<i64, Q> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(Q::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by v^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute v -> v^{-1}.
    pub fn bar_involution(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// True when this is c * v^k for some nonzero rational c.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.is_monomial() && self.coeff(0).is_one()
    }

    /// Euclidean division by a nonzero divisor, after shifting both operands
    /// to ordinary polynomials. Returns (quotient, remainder) with
    /// self = quotient * div + remainder and deg(remainder) < deg(div),
    /// everything up to the v-power unit bookkeeping of Laurent polynomials.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        // Shift to ordinary polynomials in v.
        let s_shift = self.min_exp().unwrap().min(0);
        let d_shift = div.min_exp().unwrap();
        let mut rem: BTreeMap<i64, Q> = self.shift(-s_shift).terms;
        let d = div.shift(-d_shift).terms;
        let d_deg = *d.keys().next_back().unwrap();
        let d_lead = d[&d_deg].clone();
        let mut quot: BTreeMap<i64, Q> = BTreeMap::new();
        while let Some(&r_deg) = rem.keys().next_back() {
            if r_deg < d_deg {
                break;
            }
            let factor = &rem[&r_deg] / &d_lead;
            let shift = r_deg - d_deg;
            quot.insert(shift, factor.clone());
            for (e, c) in &d {
                let te = e + shift;
                let entry = rem.entry(te).or_insert_with(Q::zero);
                *entry -= &factor * c;
                if entry.is_zero() {
                    rem.remove(&te);
                }
            }
        }
        let q = LaurentPoly { terms: quot }.shift(s_shift - d_shift);
        let r = LaurentPoly { terms: rem }.shift(s_shift);
        (q, r)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact Laurent division");
        q
    }

    /// Greatest common divisor, normalized so the lowest-exponent coefficient
    /// is 1 and the lowest exponent is 0. Uses a primitive polynomial
    /// remainder sequence over the integers to avoid coefficient blowup.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.unit_normalized();
        }
        if rhs.is_zero() {
            return self.unit_normalized();
        }
        let a = self.to_int_primitive();
        let b = rhs.to_int_primitive();
        let g = int_poly_gcd(a, b);
        Self::from_int_poly(&g).unit_normalized()
    }

    /// Divide out the unit c * v^k so the lowest term becomes exactly 1.
    pub fn unit_normalized(&self) -> Self {
        match self.min_exp() {
            None => Self::zero(),
            Some(e) => {
                let c = self.coeff(e);
                self.shift(-e).scale(&c.recip())
            }
        }
    }

    /// Clear denominators and content: primitive integer coefficients,
    /// lowest exponent 0, positive leading coefficient.
    fn to_int_primitive(&self) -> Vec<num::BigInt> {
        use num::BigInt;
        let e0 = self.min_exp().unwrap();
        let deg = (self.max_exp().unwrap() - e0) as usize;
        let mut den = BigInt::one();
        for (_, c) in self.terms() {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let mut out = vec![BigInt::zero(); deg + 1];
        for (e, c) in self.terms() {
            out[(e - e0) as usize] = c.numer() * (&den / c.denom());
        }
        let mut content = BigInt::zero();
        for c in &out {
            content = num::integer::gcd(content, c.clone());
        }
        if !content.is_one() && !content.is_zero() {
            for c in &mut out {
                *c /= &content;
            }
        }
        if out.last().map(|c| c.is_negative()).unwrap_or(false) {
            for c in &mut out {
                *c = -c.clone();
            }
        }
        out
    }

    fn from_int_poly(p: &[num::BigInt]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in p.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(e as i64, Q::from_integer(c.clone()));
            }
        }
        LaurentPoly { terms }
    }
}

/// Primitive PRS gcd for dense integer polynomials (ascending coefficients).
fn int_poly_gcd(mut a: Vec<num::BigInt>, mut b: Vec<num::BigInt>) -> Vec<num::BigInt> {
    use num::BigInt;
    fn deg(p: &[BigInt]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(p: &mut Vec<BigInt>) {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
    }
    fn primitive(p: &mut [BigInt]) {
        let mut content = BigInt::zero();
        for c in p.iter() {
            content = num::integer::gcd(content, c.clone());
        }
        if !content.is_zero() && !content.is_one() {
            for c in p.iter_mut() {
                *c /= &content;
            }
        }
    }
    trim(&mut a);
    trim(&mut b);
    loop {
        let (da, db) = match (deg(&a), deg(&b)) {
            (None, _) => {
                primitive(&mut b);
                if deg(&b).is_some() && b[deg(&b).unwrap()].is_negative() {
                    for c in &mut b {
                        *c = -c.clone();
                    }
                }
                return b;
            }
            (_, None) => {
                primitive(&mut a);
                if deg(&a).is_some() && a[deg(&a).unwrap()].is_negative() {
                    for c in &mut a {
                        *c = -c.clone();
                    }
                }
                return a;
            }
            (Some(da), Some(db)) => (da, db),
        };
        if da < db {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // Pseudo-remainder of a by b.
        let lead = b[db].clone();
        let mut r = a.clone();
        for _ in 0..=(da - db) {
            let dr = match deg(&r) {
                Some(d) if d >= db => d,
                _ => break,
            };
            let coef = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (i, bc) in b.iter().enumerate() {
                r[dr - db + i] -= &coef * bc;
            }
            trim(&mut r);
        }
        primitive(&mut r);
        a = b;
        b = r;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (*e, c.is_one()) {
                (0, _) => write!(f, "{}", c)?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", c)?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_from;

    #[test]
    fn q_int_values() {
        // [2]_q = q + q^{-1}
        let two = LaurentPoly::q_int(2);
        assert_eq!(two, LaurentPoly::q_pow(1).add(&LaurentPoly::q_pow(-1)));
        // [1]_q = 1, [0]_q = 0
        assert_eq!(LaurentPoly::q_int(1), LaurentPoly::one());
        assert!(LaurentPoly::q_int(0).is_zero());
        assert_eq!(LaurentPoly::q_int(-2), two.neg());
    }

    #[test]
    fn division_roundtrip() {
        // (q^2 - 1) / (q - 1) = q + 1 over v
        let q2m1 = LaurentPoly::q_pow(2).sub(&LaurentPoly::one());
        let qm1 = LaurentPoly::q_pow(1).sub(&LaurentPoly::one());
        let quot = q2m1.div_exact(&qm1);
        assert_eq!(quot, LaurentPoly::q_pow(1).add(&LaurentPoly::one()));
    }

    #[test]
    fn gcd_normalization() {
        // gcd((v^2-1)(v^3+2), (v^2-1) v^5) = v^2 - 1 up to normalization
        let a = LaurentPoly::v_pow(2).sub(&LaurentPoly::one());
        let b = LaurentPoly::v_pow(3).add(&LaurentPoly::from_i64(2));
        let g = a.mul(&b).gcd(&a.mul(&LaurentPoly::v_pow(5)));
        // lowest term normalized to 1: -(1 - v^2) -> (v^2 - 1)/(-1) = 1 - v^2... unit-normalized
        assert_eq!(g, a.unit_normalized());
        assert_eq!(g.coeff(g.min_exp().unwrap()), Q::one());
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly::monomial(-2, q_from(-1, 2)).add(&LaurentPoly::from_i64(3));
        assert_eq!(p.to_string(), "-1/2*v^-2 + 3");
    }
}
