//! PBW monomials, elements, and the straightening algebra.

use crate::scalar::{Cyclotomic, GenericQ, Q, RatFunc, RootOfUnity, Scalar, ScalarOps};
use num::BigInt;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

/// An ordered monomial F^a K^b E^c. The total order on (a, b, c) is
/// lexicographic, fixing the canonical form of sums.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PbwMonomial {
    pub f_exp: u32,
    pub k_exp: i32,
    pub e_exp: u32,
}

impl PbwMonomial {
    pub const fn new(f_exp: u32, k_exp: i32, e_exp: u32) -> Self {
        PbwMonomial { f_exp, k_exp, e_exp }
    }

    pub const fn unit() -> Self {
        Self::new(0, 0, 0)
    }

    pub const E: PbwMonomial = Self::new(0, 0, 1);
    pub const F: PbwMonomial = Self::new(1, 0, 0);
    pub const K: PbwMonomial = Self::new(0, 1, 0);
    pub const K_INV: PbwMonomial = Self::new(0, -1, 0);

    pub fn is_unit(&self) -> bool {
        self.f_exp == 0 && self.k_exp == 0 && self.e_exp == 0
    }

    /// Total degree in E and F.
    pub fn ef_degree(&self) -> u32 {
        self.f_exp + self.e_exp
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.f_exp {
            0 => {}
            1 => parts.push("F".into()),
            a => parts.push(format!("F^{}", a)),
        }
        match self.k_exp {
            0 => {}
            1 => parts.push("K".into()),
            b => parts.push(format!("K^{}", b)),
        }
        match self.e_exp {
            0 => {}
            1 => parts.push("E".into()),
            c => parts.push(format!("E^{}", c)),
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite scalar-weighted sum of PBW monomials. No zero coefficients are
/// stored, so equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct PbwElement<C: Scalar> {
    terms: BTreeMap<PbwMonomial, C>,
}

impl<C: Scalar> Default for PbwElement<C> {
    fn default() -> Self {
        PbwElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Scalar> PbwElement<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(m: PbwMonomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PbwElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Largest E/F degree over the support.
    pub fn ef_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.ef_degree()).max().unwrap_or(0)
    }

    pub(crate) fn insert_add<S: ScalarOps<C>>(&mut self, ops: &S, m: PbwMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = ops.add(&old, &c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }
}

impl<C: Scalar> fmt::Display for PbwElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            if cs.starts_with('(') {
                // fractional coefficients already print as (num) / (den)
                write!(f, "{} * {}", cs, m)?;
            } else {
                write!(f, "({}) * {}", cs, m)?;
            }
        }
        Ok(())
    }
}

/// The straightening context: scalar operations plus a memo table for the
/// normal forms of E^c F^a. The memo is behaviorally transparent (identical
/// results when disabled) and safe for concurrent use.
pub struct PbwAlgebra<C: Scalar, S: ScalarOps<C>> {
    ops: S,
    memo_enabled: bool,
    ef_memo: RwLock<HashMap<(u32, u32), Arc<PbwElement<C>>>>,
}

pub type GenAlgebra = PbwAlgebra<RatFunc, GenericQ>;
pub type EpsAlgebra = PbwAlgebra<Cyclotomic, RootOfUnity>;

static GENERIC: Lazy<Arc<GenAlgebra>> = Lazy::new(|| Arc::new(PbwAlgebra::new(GenericQ)));
static EPS_CACHE: Lazy<RwLock<HashMap<u32, Arc<EpsAlgebra>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

impl GenAlgebra {
    /// The shared generic-q algebra.
    pub fn global() -> Arc<GenAlgebra> {
        GENERIC.clone()
    }
}

impl EpsAlgebra {
    /// The shared root-of-unity algebra at odd l.
    pub fn for_l(l: u32) -> Arc<EpsAlgebra> {
        if let Some(a) = EPS_CACHE.read().unwrap().get(&l) {
            return a.clone();
        }
        let a = Arc::new(PbwAlgebra::new(RootOfUnity::new(l)));
        EPS_CACHE.write().unwrap().entry(l).or_insert(a).clone()
    }

    pub fn l(&self) -> u32 {
        self.ops().l()
    }
}

impl<C: Scalar, S: ScalarOps<C>> PbwAlgebra<C, S> {
    pub fn new(ops: S) -> Self {
        PbwAlgebra {
            ops,
            memo_enabled: true,
            ef_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_memo_disabled(ops: S) -> Self {
        PbwAlgebra {
            ops,
            memo_enabled: false,
            ef_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn ops(&self) -> &S {
        &self.ops
    }

    // ---- Constructors ----

    pub fn zero(&self) -> PbwElement<C> {
        PbwElement::zero()
    }

    pub fn one(&self) -> PbwElement<C> {
        PbwElement::from_term(PbwMonomial::unit(), self.ops.one())
    }

    pub fn monomial(&self, m: PbwMonomial) -> PbwElement<C> {
        PbwElement::from_term(m, self.ops.one())
    }

    pub fn e(&self) -> PbwElement<C> {
        self.monomial(PbwMonomial::E)
    }

    pub fn f(&self) -> PbwElement<C> {
        self.monomial(PbwMonomial::F)
    }

    pub fn k(&self, b: i32) -> PbwElement<C> {
        self.monomial(PbwMonomial::new(0, b, 0))
    }

    pub fn scalar(&self, c: C) -> PbwElement<C> {
        PbwElement::from_term(PbwMonomial::unit(), c)
    }

    /// The Casimir-type element Ω = qK + q^{-1}K^{-1} + (q - q^{-1})^2 FE.
    pub fn casimir(&self) -> PbwElement<C> {
        let mut out = PbwElement::zero();
        out.insert_add(&self.ops, PbwMonomial::K, self.ops.q_pow(1));
        out.insert_add(&self.ops, PbwMonomial::K_INV, self.ops.q_pow(-1));
        let c = self.ops.mul(&self.ops.q_minus_qinv(), &self.ops.q_minus_qinv());
        out.insert_add(&self.ops, PbwMonomial::new(1, 0, 1), c);
        out
    }

    /// \[K; r\] = (K q^r - K^{-1} q^{-r})/(q - q^{-1}).
    pub fn k_bracket(&self, r: i64) -> PbwElement<C> {
        let d = self.ops.q_minus_qinv_inv();
        let mut out = PbwElement::zero();
        out.insert_add(&self.ops, PbwMonomial::K, self.ops.mul(&self.ops.q_pow(r), &d));
        out.insert_add(
            &self.ops,
            PbwMonomial::K_INV,
            self.ops.neg(&self.ops.mul(&self.ops.q_pow(-r), &d)),
        );
        out
    }

    // ---- Linear structure ----

    pub fn add(&self, a: &PbwElement<C>, b: &PbwElement<C>) -> PbwElement<C> {
        let mut out = a.clone();
        for (m, c) in b.terms() {
            out.insert_add(&self.ops, *m, c.clone());
        }
        out
    }

    pub fn neg(&self, a: &PbwElement<C>) -> PbwElement<C> {
        PbwElement {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (*m, self.ops.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &PbwElement<C>, b: &PbwElement<C>) -> PbwElement<C> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &PbwElement<C>, c: &C) -> PbwElement<C> {
        if c.is_zero() {
            return PbwElement::zero();
        }
        PbwElement {
            terms: a
                .terms
                .iter()
                .map(|(m, k)| (*m, self.ops.mul(k, c)))
                .collect(),
        }
    }

    pub fn scale_rational(&self, a: &PbwElement<C>, c: &Q) -> PbwElement<C> {
        PbwElement {
            terms: a
                .terms
                .iter()
                .filter_map(|(m, k)| {
                    let s = self.ops.scale_rational(k, c);
                    if s.is_zero() {
                        None
                    } else {
                        Some((*m, s))
                    }
                })
                .collect(),
        }
    }

    pub fn scale_int(&self, a: &PbwElement<C>, c: &BigInt) -> PbwElement<C> {
        self.scale_rational(a, &Q::from_integer(c.clone()))
    }

    // ---- Multiplication ----

    /// E^c F^a in PBW normal form. Derived by induction from
    /// E F^a = F^a E + \[a\]_q F^{a-1} (K q^{1-a} - K^{-1} q^{a-1})/(q - q^{-1}).
    fn straighten_ef(&self, c: u32, a: u32) -> Arc<PbwElement<C>> {
        if self.memo_enabled {
            if let Some(hit) = self.ef_memo.read().unwrap().get(&(c, a)) {
                return hit.clone();
            }
        }
        let out = if c == 0 || a == 0 {
            Arc::new(self.monomial(PbwMonomial::new(a, 0, c)))
        } else {
            let prev = self.straighten_ef(c - 1, a);
            Arc::new(self.mul_e_left(&prev))
        };
        if self.memo_enabled {
            self.ef_memo
                .write()
                .unwrap()
                .entry((c, a))
                .or_insert_with(|| out.clone());
        }
        out
    }

    /// Left-multiply a normal-form element by the generator E.
    fn mul_e_left(&self, elem: &PbwElement<C>) -> PbwElement<C> {
        let d = self.ops.q_minus_qinv_inv();
        let mut out = PbwElement::zero();
        for (m, c) in elem.terms() {
            // E F^a K^b E^g = q^{-2b} F^a K^b E^{g+1}
            //   + [a] F^{a-1} (K q^{1-a} - K^{-1} q^{a-1})/(q-q^{-1}) K^b E^g
            let (a, b, g) = (m.f_exp, m.k_exp, m.e_exp);
            out.insert_add(
                &self.ops,
                PbwMonomial::new(a, b, g + 1),
                self.ops.mul(c, &self.ops.q_pow(-2 * b as i64)),
            );
            if a >= 1 {
                let qa = self.ops.mul(&self.ops.q_int(a as i64), &d);
                let base = self.ops.mul(c, &qa);
                out.insert_add(
                    &self.ops,
                    PbwMonomial::new(a - 1, b + 1, g),
                    self.ops.mul(&base, &self.ops.q_pow(1 - a as i64)),
                );
                out.insert_add(
                    &self.ops,
                    PbwMonomial::new(a - 1, b - 1, g),
                    self.ops.neg(&self.ops.mul(&base, &self.ops.q_pow(a as i64 - 1))),
                );
            }
        }
        out
    }

    /// Normal-form product of two monomials.
    pub fn monomial_mul(&self, m1: &PbwMonomial, m2: &PbwMonomial) -> PbwElement<C> {
        // F^{a1} K^{b1} E^{c1} · F^{a2} K^{b2} E^{c2}
        let inner = self.straighten_ef(m1.e_exp, m2.f_exp);
        let mut out = PbwElement::zero();
        for (m, c) in inner.terms() {
            // F^{a1} K^{b1} (F^α K^β E^γ) K^{b2} E^{c2}
            let phase = self.ops.q_pow(
                -2 * (m1.k_exp as i64) * (m.f_exp as i64)
                    - 2 * (m.e_exp as i64) * (m2.k_exp as i64),
            );
            let mono = PbwMonomial::new(
                m1.f_exp + m.f_exp,
                m1.k_exp + m.k_exp + m2.k_exp,
                m.e_exp + m2.e_exp,
            );
            out.insert_add(&self.ops, mono, self.ops.mul(c, &phase));
        }
        out
    }

    pub fn mul(&self, a: &PbwElement<C>, b: &PbwElement<C>) -> PbwElement<C> {
        let mut out = PbwElement::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let c = self.ops.mul(c1, c2);
                if c.is_zero() {
                    continue;
                }
                // Fast path: no straightening needed.
                if m1.e_exp == 0 || m2.f_exp == 0 {
                    let phase = self.ops.q_pow(
                        -2 * (m1.k_exp as i64) * (m2.f_exp as i64)
                            - 2 * (m1.e_exp as i64) * (m2.k_exp as i64),
                    );
                    out.insert_add(
                        &self.ops,
                        PbwMonomial::new(
                            m1.f_exp + m2.f_exp,
                            m1.k_exp + m2.k_exp,
                            m1.e_exp + m2.e_exp,
                        ),
                        self.ops.mul(&c, &phase),
                    );
                    continue;
                }
                for (m, k) in self.monomial_mul(m1, m2).terms() {
                    out.insert_add(&self.ops, *m, self.ops.mul(k, &c));
                }
            }
        }
        out
    }

    pub fn commutator(&self, a: &PbwElement<C>, b: &PbwElement<C>) -> PbwElement<C> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &PbwElement<C>, n: u32) -> PbwElement<C> {
        // Repeated squaring.
        if n == 0 {
            return self.one();
        }
        let mut base = a.clone();
        let mut n = n;
        let mut acc: Option<PbwElement<C>> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(prev) => self.mul(&prev, &base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = self.mul(&base, &base);
        }
        acc.unwrap()
    }

    /// T_k(a) for a central (or at least self-commuting) element a.
    pub fn chebyshev(&self, k: u32, a: &PbwElement<C>) -> PbwElement<C> {
        crate::scalar::chebyshev_eval(
            k,
            a,
            self.one(),
            |x, y| self.mul(x, y),
            |x, y| self.add(x, y),
            |x, c| self.scale_int(x, c),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<GenAlgebra> {
        GenAlgebra::global()
    }

    #[test]
    fn defining_relations() {
        let a = alg();
        // K E K^{-1} = q^2 E
        let lhs = a.mul(&a.mul(&a.k(1), &a.e()), &a.k(-1));
        assert_eq!(lhs, a.scale(&a.e(), &RatFunc::q_pow(1).mul(&RatFunc::q_pow(1))));
        // E F - F E = (K - K^{-1})/(q - q^{-1})
        let comm = a.commutator(&a.e(), &a.f());
        assert_eq!(comm, a.k_bracket(0));
    }

    #[test]
    fn ef2_straightening() {
        let a = alg();
        // (E F^2) - (F^2 E) = [2]_q F (K q^{-1} - K^{-1} q)/(q - q^{-1}),
        // computed independently by repeated single-step commutation.
        let f2 = a.pow(&a.f(), 2);
        let lhs = a.commutator(&a.e(), &f2);
        let expect = a.scale(&a.mul(&a.f(), &a.k_bracket(-1)), &RatFunc::q_int(2));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn casimir_is_central() {
        let a = alg();
        let omega = a.casimir();
        assert!(a.commutator(&omega, &a.e()).is_zero());
        assert!(a.commutator(&omega, &a.f()).is_zero());
        assert!(a.commutator(&omega, &a.k(1)).is_zero());
    }

    #[test]
    fn memo_transparent() {
        let with = PbwAlgebra::new(GenericQ);
        let without = PbwAlgebra::with_memo_disabled(GenericQ);
        let x = with.mul(&with.pow(&with.e(), 3), &with.pow(&with.f(), 4));
        let y = without.mul(&without.pow(&without.e(), 3), &without.pow(&without.f(), 4));
        assert_eq!(x, y);
    }

    #[test]
    fn associativity_spot() {
        let a = alg();
        let u = a.add(&a.mul(&a.e(), &a.f()), &a.k(2));
        let w = a.add(&a.f(), &a.scale(&a.e(), &RatFunc::v_pow(1)));
        let z = a.add(&a.k(-1), &a.mul(&a.f(), &a.f()));
        let l = a.mul(&a.mul(&u, &w), &z);
        let r = a.mul(&u, &a.mul(&w, &z));
        assert_eq!(l, r);
    }
}
