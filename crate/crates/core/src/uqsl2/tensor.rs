//! Elements of U_q(sl2)^{⊗n} with componentwise PBW normal form.

use super::pbw::{PbwAlgebra, PbwElement, PbwMonomial};
use crate::scalar::{Q, Scalar, ScalarOps};
use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A finite scalar-weighted sum of n-tuples of PBW monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement<C: Scalar> {
    arity: usize,
    terms: BTreeMap<Vec<PbwMonomial>, C>,
}

impl<C: Scalar> TensorElement<C> {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(mono: Vec<PbwMonomial>, c: C) -> Self {
        let arity = mono.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        TensorElement { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<PbwMonomial>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[PbwMonomial]) -> Option<&C> {
        self.terms.get(mono)
    }

    fn insert_add<S: ScalarOps<C>>(&mut self, ops: &S, m: Vec<PbwMonomial>, c: C) {
        debug_assert_eq!(m.len(), self.arity);
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

impl<C: Scalar> fmt::Display for TensorElement<C> {
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
                write!(f, "{} * ", cs)?;
            } else {
                write!(f, "({}) * ", cs)?;
            }
            let mut slot_first = true;
            for slot in m {
                if !slot_first {
                    write!(f, " (x) ")?;
                }
                slot_first = false;
                write!(f, "{}", slot)?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar, S: ScalarOps<C>> PbwAlgebra<C, S> {
    pub fn tensor_zero(&self, arity: usize) -> TensorElement<C> {
        TensorElement::zero(arity)
    }

    pub fn tensor_one(&self, arity: usize) -> TensorElement<C> {
        TensorElement::from_term(vec![PbwMonomial::unit(); arity], self.ops().one())
    }

    pub fn tensor_scalar(&self, arity: usize, c: C) -> TensorElement<C> {
        TensorElement::from_term(vec![PbwMonomial::unit(); arity], c)
    }

    /// Embed a one-site element at `slot` (0-based) with units elsewhere.
    pub fn embed_at(
        &self,
        elem: &PbwElement<C>,
        slot: usize,
        arity: usize,
    ) -> TensorElement<C> {
        let mut out = TensorElement::zero(arity);
        for (m, c) in elem.terms() {
            let mut mono = vec![PbwMonomial::unit(); arity];
            mono[slot] = *m;
            out.insert_add(self.ops(), mono, c.clone());
        }
        out
    }

    /// Embed a monomial generator at `slot`.
    pub fn gen_at(&self, m: PbwMonomial, slot: usize, arity: usize) -> TensorElement<C> {
        self.embed_at(&self.monomial(m), slot, arity)
    }

    pub fn tensor_add(&self, a: &TensorElement<C>, b: &TensorElement<C>) -> TensorElement<C> {
        assert_eq!(a.arity, b.arity, "tensor arity mismatch");
        let mut out = a.clone();
        for (m, c) in b.terms() {
            out.insert_add(self.ops(), m.clone(), c.clone());
        }
        out
    }

    pub fn tensor_neg(&self, a: &TensorElement<C>) -> TensorElement<C> {
        TensorElement {
            arity: a.arity,
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ops().neg(c)))
                .collect(),
        }
    }

    pub fn tensor_sub(&self, a: &TensorElement<C>, b: &TensorElement<C>) -> TensorElement<C> {
        self.tensor_add(a, &self.tensor_neg(b))
    }

    pub fn tensor_scale(&self, a: &TensorElement<C>, c: &C) -> TensorElement<C> {
        if c.is_zero() {
            return TensorElement::zero(a.arity);
        }
        TensorElement {
            arity: a.arity,
            terms: a
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), self.ops().mul(k, c)))
                .collect(),
        }
    }

    pub fn tensor_scale_rational(&self, a: &TensorElement<C>, c: &Q) -> TensorElement<C> {
        TensorElement {
            arity: a.arity,
            terms: a
                .terms
                .iter()
                .filter_map(|(m, k)| {
                    let s = self.ops().scale_rational(k, c);
                    if s.is_zero() {
                        None
                    } else {
                        Some((m.clone(), s))
                    }
                })
                .collect(),
        }
    }

    pub fn tensor_scale_int(&self, a: &TensorElement<C>, c: &BigInt) -> TensorElement<C> {
        self.tensor_scale_rational(a, &Q::from_integer(c.clone()))
    }

    pub fn tensor_mul(&self, a: &TensorElement<C>, b: &TensorElement<C>) -> TensorElement<C> {
        assert_eq!(a.arity, b.arity, "tensor arity mismatch");
        let n = a.arity;
        let mut out = TensorElement::zero(n);
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let c = self.ops().mul(c1, c2);
                if c.is_zero() {
                    continue;
                }
                // Componentwise products, then distribute across slots.
                let slot_prods: Vec<PbwElement<C>> = (0..n)
                    .map(|i| self.monomial_mul(&m1[i], &m2[i]))
                    .collect();
                self.distribute(&mut out, &slot_prods, c);
            }
        }
        out
    }

    fn distribute(
        &self,
        out: &mut TensorElement<C>,
        slot_prods: &[PbwElement<C>],
        coeff: C,
    ) {
        let n = slot_prods.len();
        let mut mono = vec![PbwMonomial::unit(); n];
        self.distribute_rec(out, slot_prods, 0, &mut mono, coeff);
    }

    fn distribute_rec(
        &self,
        out: &mut TensorElement<C>,
        slot_prods: &[PbwElement<C>],
        slot: usize,
        mono: &mut Vec<PbwMonomial>,
        coeff: C,
    ) {
        if coeff.is_zero() {
            return;
        }
        if slot == slot_prods.len() {
            out.insert_add(self.ops(), mono.clone(), coeff);
            return;
        }
        for (m, c) in slot_prods[slot].terms() {
            mono[slot] = *m;
            let next = self.ops().mul(&coeff, c);
            self.distribute_rec(out, slot_prods, slot + 1, mono, next);
        }
        mono[slot] = PbwMonomial::unit();
    }

    pub fn tensor_commutator(
        &self,
        a: &TensorElement<C>,
        b: &TensorElement<C>,
    ) -> TensorElement<C> {
        self.tensor_sub(&self.tensor_mul(a, b), &self.tensor_mul(b, a))
    }

    pub fn tensor_pow(&self, a: &TensorElement<C>, n: u32) -> TensorElement<C> {
        if n == 0 {
            return self.tensor_one(a.arity);
        }
        let mut base = a.clone();
        let mut n = n;
        let mut acc: Option<TensorElement<C>> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(prev) => self.tensor_mul(&prev, &base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = self.tensor_mul(&base, &base);
        }
        acc.unwrap()
    }

    /// T_k(a) for a self-commuting tensor element.
    pub fn tensor_chebyshev(&self, k: u32, a: &TensorElement<C>) -> TensorElement<C> {
        crate::scalar::chebyshev_eval(
            k,
            a,
            self.tensor_one(a.arity),
            |x, y| self.tensor_mul(x, y),
            |x, y| self.tensor_add(x, y),
            |x, c| self.tensor_scale_int(x, c),
        )
    }

    /// View a one-site element as arity-1 tensor.
    pub fn to_tensor1(&self, elem: &PbwElement<C>) -> TensorElement<C> {
        self.embed_at(elem, 0, 1)
    }

    /// Extract the one-site element from an arity-1 tensor.
    pub fn from_tensor1(&self, t: &TensorElement<C>) -> PbwElement<C> {
        assert_eq!(t.arity, 1);
        let mut out = PbwElement::zero();
        for (m, c) in t.terms() {
            out.insert_add(self.ops(), m[0], c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatFunc;
    use crate::uqsl2::GenAlgebra;

    #[test]
    fn componentwise_product() {
        let a = GenAlgebra::global();
        // [E ⊗ 1, F ⊗ 1] = (K - K^{-1})/(q - q^{-1}) ⊗ 1
        let comm = a.tensor_commutator(
            &a.gen_at(PbwMonomial::E, 0, 2),
            &a.gen_at(PbwMonomial::F, 0, 2),
        );
        let d = RatFunc::q_minus_qinv().inv().unwrap();
        let mut expect = TensorElement::zero(2);
        expect.insert_add(a.ops(), vec![PbwMonomial::K, PbwMonomial::unit()], d.clone());
        expect.insert_add(
            a.ops(),
            vec![PbwMonomial::K_INV, PbwMonomial::unit()],
            d.neg(),
        );
        assert_eq!(comm, expect);
    }

    #[test]
    fn embed_commutes_across_slots() {
        let a = GenAlgebra::global();
        let x = a.embed_at(&a.e(), 0, 3);
        let y = a.embed_at(&a.f(), 2, 3);
        assert_eq!(a.tensor_mul(&x, &y), a.tensor_mul(&y, &x));
    }
}
