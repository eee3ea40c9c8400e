//! The Verma-module oracle.
//!
//! The module M_x has basis v_0, v_1, ... over Q(v)(x) with the action
//!
//!   K v_n = x q^{-2n} v_n,   F v_n = v_{n+1},
//!   E v_0 = 0,   E v_n = \[n\]_q (x q^{1-n} - x^{-1} q^{n-1})/(q - q^{-1}) v_{n-1}.
//!
//! The weight x is kept symbolic: coefficients are Laurent polynomials in x
//! over Q(v). Acting with PBW elements never divides by x-dependent values,
//! so this stays exact. The oracle is independent of the straightening code
//! path (it only uses the generator actions), which is what makes it a
//! certificate for `normal_form_product`.

use super::pbw::{PbwElement, PbwMonomial};
use crate::scalar::{GenericQ, RatFunc, ScalarOps};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum VermaError {
    #[error("truncation exceeded: F-degree pushes basis index {0} past bound {1}")]
    TruncationExceeded(usize, usize),
}

/// A Laurent polynomial in the symbolic weight x with Q(v) coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct XLaurent {
    terms: BTreeMap<i64, RatFunc>,
}

impl XLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        XLaurent { terms }
    }

    pub fn one() -> Self {
        Self::monomial(0, RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(RatFunc::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        XLaurent { terms }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(RatFunc::zero);
                *entry = entry.add(&c1.mul(c2));
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        XLaurent { terms }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XLaurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k.mul(c))).collect(),
        }
    }

    /// Substitute a concrete rational-function value for x.
    pub fn eval(&self, x: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            acc = acc.add(&c.mul(&x.pow(*e as i32)));
        }
        acc
    }
}

impl fmt::Display for XLaurent {
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
            match e {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, e)?,
            }
        }
        Ok(())
    }
}

/// The image of a basis vector under an algebra element: coefficients on
/// v_0 .. v_N.
#[derive(Clone, PartialEq, Debug)]
pub struct VermaVector {
    pub coeffs: Vec<XLaurent>,
}

impl VermaVector {
    pub fn zero(truncation: usize) -> Self {
        VermaVector {
            coeffs: vec![XLaurent::zero(); truncation + 1],
        }
    }

    pub fn basis(m: usize, truncation: usize) -> Self {
        let mut v = Self::zero(truncation);
        v.coeffs[m] = XLaurent::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        VermaVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &XLaurent) -> Self {
        VermaVector {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }
}

/// E-action factor on v_n: \[n\]_q (x q^{1-n} - x^{-1} q^{n-1})/(q - q^{-1}).
fn e_factor(n: usize) -> XLaurent {
    let ops = GenericQ;
    let n = n as i64;
    let d = ops.q_minus_qinv_inv();
    let c = ops.mul(&ops.q_int(n), &d);
    XLaurent::monomial(1, c.mul(&RatFunc::q_pow(1 - n)))
        .add(&XLaurent::monomial(-1, c.mul(&RatFunc::q_pow(n - 1)).neg()))
}

/// Apply a PBW element to the basis vector v_m of the Verma module with
/// symbolic weight, truncated at v_N.
pub fn verma_action(
    u: &PbwElement<RatFunc>,
    m: usize,
    truncation: usize,
) -> Result<VermaVector, VermaError> {
    let mut out = VermaVector::zero(truncation);
    if m > truncation {
        return Err(VermaError::TruncationExceeded(m, truncation));
    }
    for (mono, c) in u.terms() {
        if let Some((idx, coeff)) = monomial_action(mono, m, truncation)? {
            out.coeffs[idx] = out.coeffs[idx].add(&coeff.scale(c));
        }
    }
    Ok(out)
}

/// Apply one monomial F^a K^b E^c to v_m; None when E annihilates.
fn monomial_action(
    mono: &PbwMonomial,
    m: usize,
    truncation: usize,
) -> Result<Option<(usize, XLaurent)>, VermaError> {
    let c_exp = mono.e_exp as usize;
    if c_exp > m {
        return Ok(None);
    }
    let mut coeff = XLaurent::one();
    // E^c: v_m -> v_{m-c}
    for j in 0..c_exp {
        coeff = coeff.mul(&e_factor(m - j));
    }
    let after_e = m - c_exp;
    // K^b: multiply by (x q^{-2 after_e})^b
    let b = mono.k_exp as i64;
    if b != 0 {
        coeff = coeff.mul(&XLaurent::monomial(
            b,
            RatFunc::q_pow(-2 * after_e as i64 * b),
        ));
    }
    // F^a: v -> v_{+a}
    let target = after_e + mono.f_exp as usize;
    if target > truncation {
        return Err(VermaError::TruncationExceeded(target, truncation));
    }
    Ok(Some((target, coeff)))
}

/// Apply u to a general vector (linearity).
pub fn verma_action_vec(
    u: &PbwElement<RatFunc>,
    v: &VermaVector,
    truncation: usize,
) -> Result<VermaVector, VermaError> {
    let mut out = VermaVector::zero(truncation);
    for (m, c) in v.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let img = verma_action(u, m, truncation)?;
        out = out.add(&img.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarOps;
    use crate::uqsl2::GenAlgebra;

    #[test]
    fn highest_weight_killed() {
        let a = GenAlgebra::global();
        let img = verma_action(&a.e(), 0, 10).unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn casimir_acts_by_scalar() {
        let a = GenAlgebra::global();
        // Ω v_n = (q x + q^{-1} x^{-1}) v_n
        let omega = a.casimir();
        for n in 0..4 {
            let img = verma_action(&omega, n, 10).unwrap();
            let expect = XLaurent::monomial(1, RatFunc::q_pow(1))
                .add(&XLaurent::monomial(-1, RatFunc::q_pow(-1)));
            let mut want = VermaVector::zero(10);
            want.coeffs[n] = expect;
            assert_eq!(img, want, "n = {}", n);
        }
    }

    #[test]
    fn ef_commutator_on_v1() {
        let a = GenAlgebra::global();
        // (EF - FE) v_1 = ((x q^{-2} - x^{-1} q^{2})/(q - q^{-1})) v_1
        let comm = a.commutator(&a.e(), &a.f());
        let img = verma_action(&comm, 1, 10).unwrap();
        let d = GenericQ.q_minus_qinv_inv();
        let expect = XLaurent::monomial(1, RatFunc::q_pow(-1).mul(&RatFunc::q_pow(-1)).mul(&d))
            .add(&XLaurent::monomial(-1, RatFunc::q_pow(2).mul(&d).neg()));
        let mut want = VermaVector::zero(10);
        want.coeffs[1] = expect;
        assert_eq!(img, want);
    }

    #[test]
    fn truncation_guard() {
        let a = GenAlgebra::global();
        let f11 = a.pow(&a.f(), 11);
        assert!(matches!(
            verma_action(&f11, 0, 10),
            Err(VermaError::TruncationExceeded(11, 10))
        ));
    }

    /// The oracle certificate: action of a product equals composed actions.
    #[test]
    fn action_respects_products() {
        let a = GenAlgebra::global();
        let u = a.mul(&a.e(), &a.pow(&a.f(), 2));
        let w = a.add(&a.mul(&a.k(1), &a.e()), &a.f());
        let uw = a.mul(&u, &w);
        for m in 0..3 {
            let direct = verma_action(&uw, m, 12).unwrap();
            let w_img = verma_action(&w, m, 12).unwrap();
            let composed = verma_action_vec(&u, &w_img, 12).unwrap();
            assert_eq!(direct, composed, "m = {}", m);
        }
    }
}
