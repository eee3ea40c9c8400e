//! Normalized Chebyshev polynomials T_k, with T_k(u + u^{-1}) = u^k + u^{-k}.

use num::{BigInt, One, Zero};

/// T_k as dense integer coefficients, ascending degree.
///
/// T_0 = 2, T_1 = x, and T_k = x·T_{k-1} - T_{k-2} for k ≥ 2.
pub fn chebyshev(k: u32) -> Vec<BigInt> {
    let mut t0: Vec<BigInt> = vec![BigInt::from(2)];
    let mut t1: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    match k {
        0 => return t0,
        1 => return t1,
        _ => {}
    }
    for _ in 2..=k {
        let mut next = vec![BigInt::zero(); t1.len() + 1];
        for (i, c) in t1.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        for (i, c) in t0.iter().enumerate() {
            next[i] -= c;
        }
        t0 = t1;
        t1 = next;
    }
    t1
}

/// Evaluate T_k at an element of any commutative-enough algebra, given its
/// powers are formed by `mul` and scalars injected by `from_int`. Intended
/// for central elements; the caller guarantees commutativity where it
/// matters.
pub fn chebyshev_eval<T>(
    k: u32,
    x: &T,
    one: T,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    scale_int: impl Fn(&T, &BigInt) -> T,
) -> T {
    let coeffs = chebyshev(k);
    // Horner evaluation.
    let mut acc = scale_int(&one, coeffs.last().unwrap());
    for c in coeffs.iter().rev().skip(1) {
        acc = add(&mul(&acc, x), &scale_int(&one, c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentPoly;
    use num::BigRational;

    #[test]
    fn small_values() {
        assert_eq!(chebyshev(0), vec![BigInt::from(2)]);
        assert_eq!(chebyshev(1), vec![BigInt::zero(), BigInt::one()]);
        // T_2 = x^2 - 2
        assert_eq!(
            chebyshev(2),
            vec![BigInt::from(-2), BigInt::zero(), BigInt::one()]
        );
        // T_3 = x^3 - 3x
        assert_eq!(
            chebyshev(3),
            vec![
                BigInt::zero(),
                BigInt::from(-3),
                BigInt::zero(),
                BigInt::one()
            ]
        );
    }

    /// Independent oracle: expand T_k(u + u^{-1}) in the Laurent ring and
    /// compare against u^k + u^{-k}.
    #[test]
    fn defining_identity_in_laurent_ring() {
        for k in 0..=9u32 {
            let u_plus = LaurentPoly::v_pow(1).add(&LaurentPoly::v_pow(-1));
            let val = chebyshev_eval(
                k,
                &u_plus,
                LaurentPoly::one(),
                |a, b| a.mul(b),
                |a, b| a.add(b),
                |a, c| a.scale(&BigRational::from_integer(c.clone())),
            );
            let expect = LaurentPoly::v_pow(k as i64).add(&LaurentPoly::v_pow(-(k as i64)));
            assert_eq!(val, expect, "T_{}", k);
        }
    }

    /// T_{ab}(x) = T_a(T_b(x)) for a, b ≤ 6, checked on the Laurent model.
    #[test]
    fn composition_law() {
        let u_plus = LaurentPoly::v_pow(1).add(&LaurentPoly::v_pow(-1));
        let eval = |k: u32, x: &LaurentPoly| {
            chebyshev_eval(
                k,
                x,
                LaurentPoly::one(),
                |a, b| a.mul(b),
                |a, b| a.add(b),
                |a, c| a.scale(&BigRational::from_integer(c.clone())),
            )
        };
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                assert_eq!(eval(a * b, &u_plus), eval(a, &eval(b, &u_plus)));
            }
        }
    }
}
