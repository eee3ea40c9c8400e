//! The cyclotomic field Q\[x\]/Φ_{4l}(x) for odd l ≥ 3.
//!
//! The class of x is a primitive 4l-th root of unity. The designated
//! constants are
//!
//!   ε     = x^4              (multiplicative order l),
//!   ε^1/2 = ε^{(l+1)/2}      (the fixed square root of ε, = x^{2l+2}),
//!   i     = x^l              (squares to -1),
//!   ζ     = i·ε^{1/2}        (satisfies ζ^2 = -ε, order 4l).
//!
//! Φ_{4l} is computed, never hard-coded, by exact division of x^{4l} - 1 by
//! the product of the cyclotomic polynomials of the proper divisors of 4l.

use super::Q;
use num::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Shared data for one field Q\[x\]/Φ_{4l}(x).
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Monic Φ_{4l}, dense ascending coefficients, length deg+1.
    modulus: Vec<Q>,
    /// x^{deg+j} mod Φ for j = 0..deg-1, each reduced to length deg.
    high_powers: Vec<Vec<Q>>,
    /// x^k mod Φ for k = 0..4l-1 (used by `root_pow`).
    root_powers: Vec<Vec<Q>>,
}

static FIELDS: Lazy<RwLock<HashMap<u32, Arc<CyclotomicField>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

impl CyclotomicField {
    /// The field of order 4l. Cached globally; cheap to call repeatedly.
    pub fn with_order(order: u32) -> Arc<CyclotomicField> {
        assert!(order % 4 == 0 && (order / 4) % 2 == 1 && order / 4 >= 3,
            "order must be 4l with l odd, l >= 3");
        if let Some(f) = FIELDS.read().unwrap().get(&order) {
            return f.clone();
        }
        let f = Arc::new(Self::build(order));
        FIELDS
            .write()
            .unwrap()
            .entry(order)
            .or_insert(f)
            .clone()
    }

    /// The field containing the primitive l-th root of unity ε (order 4l).
    pub fn for_l(l: u32) -> Arc<CyclotomicField> {
        Self::with_order(4 * l)
    }

    fn build(order: u32) -> CyclotomicField {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        // Precompute x^{deg+j} mod Φ.
        let mut high_powers: Vec<Vec<Q>> = Vec::with_capacity(deg.saturating_sub(1));
        // x^deg = -(lower part of Φ) since Φ is monic.
        let mut cur: Vec<Q> = modulus[..deg].iter().map(|c| -c.clone()).collect();
        high_powers.push(cur.clone());
        for _ in 1..deg {
            // multiply by x
            let top = cur[deg - 1].clone();
            let mut next = vec![Q::zero(); deg];
            for k in (1..deg).rev() {
                next[k] = cur[k - 1].clone();
            }
            if !top.is_zero() {
                for (k, m) in modulus[..deg].iter().enumerate() {
                    next[k] -= &top * m;
                }
            }
            cur = next;
            high_powers.push(cur.clone());
        }
        let mut root_powers: Vec<Vec<Q>> = Vec::with_capacity(order as usize);
        let mut p = vec![Q::zero(); deg];
        p[0] = Q::one();
        for _ in 0..order {
            root_powers.push(p.clone());
            // multiply by x, reduce
            let top = p[deg - 1].clone();
            let mut next = vec![Q::zero(); deg];
            for k in (1..deg).rev() {
                next[k] = p[k - 1].clone();
            }
            if !top.is_zero() {
                for (k, hp) in high_powers[0].iter().enumerate() {
                    next[k] += &top * hp;
                }
            }
            p = next;
        }
        CyclotomicField {
            order,
            modulus,
            high_powers,
            root_powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn l(&self) -> u32 {
        self.order / 4
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Monic Φ_{4l} as dense ascending rational coefficients.
    pub fn modulus(&self) -> &[Q] {
        &self.modulus
    }

    fn elem(self: &Arc<Self>, coeffs: Vec<Q>) -> Cyclotomic {
        debug_assert_eq!(coeffs.len(), self.degree());
        Cyclotomic {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        self.elem(vec![Q::zero(); self.degree()])
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.from_rational(Q::one())
    }

    pub fn from_rational(self: &Arc<Self>, c: Q) -> Cyclotomic {
        let mut coeffs = vec![Q::zero(); self.degree()];
        coeffs[0] = c;
        self.elem(coeffs)
    }

    pub fn from_i64(self: &Arc<Self>, c: i64) -> Cyclotomic {
        self.from_rational(Q::from_integer(c.into()))
    }

    /// class(x)^k for any integer k (k taken mod 4l).
    pub fn root_pow(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let m = self.order as i64;
        let k = k.rem_euclid(m) as usize;
        self.elem(self.root_powers[k].clone())
    }

    /// ε = class(x)^4, the primitive l-th root of unity.
    pub fn epsilon(self: &Arc<Self>) -> Cyclotomic {
        self.root_pow(4)
    }

    /// The fixed square root ε^{1/2} = ε^{(l+1)/2} = class(x)^{2l+2}.
    pub fn epsilon_sqrt(self: &Arc<Self>) -> Cyclotomic {
        self.root_pow(2 * self.l() as i64 + 2)
    }

    /// i = class(x)^l.
    pub fn imag_unit(self: &Arc<Self>) -> Cyclotomic {
        self.root_pow(self.l() as i64)
    }

    /// ζ = i · ε^{1/2} = class(x)^{3l+2}.
    pub fn zeta(self: &Arc<Self>) -> Cyclotomic {
        self.root_pow(3 * self.l() as i64 + 2)
    }

    /// ε^{k/2}, i.e. the image of v^k under specialization.
    pub fn v_pow(self: &Arc<Self>, k: i64) -> Cyclotomic {
        self.root_pow((2 * self.l() as i64 + 2) * k)
    }

    /// ε^k, the image of q^k.
    pub fn q_pow(self: &Arc<Self>, k: i64) -> Cyclotomic {
        self.root_pow(4 * k)
    }
}

/// An element of Q\[x\]/Φ_{4l}(x): a dense coefficient vector of length
/// deg Φ_{4l}. All values are immutable after construction.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Q>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(4l={}, {})", self.field.order, self)
    }
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational part, when the element is rational; None otherwise.
    pub fn as_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(
            self.field.order, rhs.field.order,
            "mixed cyclotomic field orders"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let deg = self.field.degree();
        let mut prod = vec![Q::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = prod[..deg].to_vec();
        for (j, c) in prod[deg..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, hp) in self.field.high_powers[j].iter().enumerate() {
                out[k] += c * hp;
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q\[x\];
    /// None for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Extended gcd of self (as a polynomial) and the modulus.
        let mut r0: Vec<Q> = self.field.modulus.clone();
        let mut r1: Vec<Q> = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Q> = vec![];
        let mut s1: Vec<Q> = vec![Q::one()];
        while poly_deg(&r1).is_some() {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the gcd; since Φ is irreducible over Q it is a nonzero constant.
        let c = r0
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|d| r0[d].clone())
            .expect("gcd with irreducible modulus cannot vanish");
        assert_eq!(poly_deg(&r0), Some(0), "modulus not coprime with element");
        let mut coeffs = vec![Q::zero(); self.field.degree()];
        for (k, v) in s0.iter().enumerate() {
            coeffs[k] = v / &c;
        }
        Some(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("zero to negative power").pow(-k);
        }
        let mut base = self.clone();
        let mut k = k as u64;
        let mut acc = self.field.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order, when the element is a root of unity bounded by
    /// the field order; None otherwise.
    pub fn mult_order(&self) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=self.field.order {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c.is_one()) {
                (0, _) => write!(f, "{}", c)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", c)?,
                (_, true) => write!(f, "x^{}", e)?,
                (_, false) => write!(f, "{}*x^{}", c, e)?,
            }
        }
        Ok(())
    }
}

/// Φ_m(x), monic, dense ascending coefficients. Computed by exact division
/// of x^m - 1 by the product of Φ_d over proper divisors d of m.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Q> {
    assert!(m >= 1);
    let mut num = vec![Q::zero(); m as usize + 1];
    num[0] = -Q::one();
    num[m as usize] = Q::one();
    let mut den = vec![Q::one()];
    for d in 1..m {
        if m % d == 0 {
            den = poly_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    let (q, r) = poly_div_rem(&num, &den);
    assert!(poly_deg(&r).is_none(), "inexact cyclotomic division");
    q
}

fn poly_deg(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(p: &mut Vec<Q>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_div_rem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut quot = vec![Q::zero(); a.len()];
    while let Some(dr) = poly_deg(&rem) {
        if dr < db {
            break;
        }
        let f = &rem[dr] / &lead;
        quot[dr - db] = f.clone();
        for (k, c) in b.iter().enumerate() {
            rem[dr - db + k] -= &f * c;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_12_is_correct() {
        // Φ_12 = x^4 - x^2 + 1
        let phi = cyclotomic_polynomial(12);
        let expect: Vec<i64> = vec![1, 0, -1, 0, 1];
        assert_eq!(
            phi,
            expect
                .into_iter()
                .map(|c| Q::from_integer(c.into()))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn designated_constants() {
        for l in [3u32, 5] {
            let f = CyclotomicField::for_l(l);
            let eps = f.epsilon();
            assert_eq!(eps.mult_order(), Some(l));
            let sq = f.epsilon_sqrt();
            assert_eq!(sq.mul(&sq), eps);
            let i = f.imag_unit();
            assert_eq!(i.mul(&i), f.from_i64(-1));
            let zeta = f.zeta();
            assert_eq!(zeta.mul(&zeta), eps.neg());
            assert_eq!(zeta.mult_order(), Some(4 * l));
            // -(ζ^2 + ζ^-2) = ε + ε^{-1}
            let lhs = zeta.pow(2).add(&zeta.pow(-2)).neg();
            let rhs = eps.add(&eps.inv().unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CyclotomicField::for_l(3);
        let a = f.root_pow(5).add(&f.from_i64(2));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
    }
}
