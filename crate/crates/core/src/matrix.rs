//! Dense matrices over the scalar layers and over tensor-algebra elements.
//!
//! Two flavors: [`ScalarMat`] (numeric entries in a coefficient field, used
//! for representation matrices and R-matrices) and [`ElemMat`] (entries in
//! U_q^{⊗n}, used for generator matrices under the Alekseev embedding).

use crate::scalar::{Scalar, ScalarOps};
use crate::uqsl2::{PbwAlgebra, TensorElement};

/// Dense square or rectangular matrix over a coefficient field.
#[derive(Clone, PartialEq, Debug)]
pub struct ScalarMat<C: Scalar> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<C>,
}

impl<C: Scalar> ScalarMat<C> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ScalarMat { rows, cols, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn identity<S: ScalarOps<C>>(ops: &S, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ops.one() } else { ops.zero() })
    }

    pub fn zero<S: ScalarOps<C>>(ops: &S, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| ops.zero())
    }

    pub fn mul<S: ScalarOps<C>>(&self, ops: &S, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = ops.zero();
            for k in 0..self.cols {
                acc = ops.add(&acc, &ops.mul(self.at(i, k), rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn add<S: ScalarOps<C>>(&self, ops: &S, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| ops.add(self.at(i, j), rhs.at(i, j)))
    }

    pub fn sub<S: ScalarOps<C>>(&self, ops: &S, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| ops.sub(self.at(i, j), rhs.at(i, j)))
    }

    pub fn scale<S: ScalarOps<C>>(&self, ops: &S, c: &C) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| ops.mul(self.at(i, j), c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Kronecker product; index (i1, i2) maps to i1 * rhs.rows + i2.
    pub fn kron<S: ScalarOps<C>>(&self, ops: &S, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let (i1, i2) = (i / rhs.rows, i % rhs.rows);
            let (j1, j2) = (j / rhs.cols, j % rhs.cols);
            ops.mul(self.at(i1, j1), rhs.at(i2, j2))
        })
    }

    /// Conjugate by the flip of a d x d tensor square: P (self) P where
    /// P(e_i ⊗ e_j) = e_j ⊗ e_i.
    pub fn flip_conjugate(&self, d: usize) -> Self {
        assert_eq!(self.rows, d * d);
        Self::from_fn(self.rows, self.cols, |i, j| {
            let fi = (i % d) * d + i / d;
            let fj = (j % d) * d + j / d;
            self.at(fi, fj).clone()
        })
    }

    /// Left-multiply by the flip: row permutation.
    pub fn flip_left(&self, d: usize) -> Self {
        assert_eq!(self.rows, d * d);
        Self::from_fn(self.rows, self.cols, |i, j| {
            let fi = (i % d) * d + i / d;
            self.at(fi, j).clone()
        })
    }

    pub fn trace<S: ScalarOps<C>>(&self, ops: &S) -> C {
        assert_eq!(self.rows, self.cols);
        let mut acc = ops.zero();
        for i in 0..self.rows {
            acc = ops.add(&acc, self.at(i, i));
        }
        acc
    }

    /// Inverse by Gauss-Jordan elimination; None when singular.
    pub fn inverse<S: ScalarOps<C>>(&self, ops: &S) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(ops, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(col, j).clone();
                    a.set(col, j, a.at(pivot, j).clone());
                    a.set(pivot, j, tmp);
                    let tmp = inv.at(col, j).clone();
                    inv.set(col, j, inv.at(pivot, j).clone());
                    inv.set(pivot, j, tmp);
                }
            }
            let p = ops.inv(a.at(col, col))?;
            for j in 0..n {
                a.set(col, j, ops.mul(a.at(col, j), &p));
                inv.set(col, j, ops.mul(inv.at(col, j), &p));
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let av = ops.sub(a.at(r, j), &ops.mul(&f, a.at(col, j)));
                    a.set(r, j, av);
                    let iv = ops.sub(inv.at(r, j), &ops.mul(&f, inv.at(col, j)));
                    inv.set(r, j, iv);
                }
            }
        }
        Some(inv)
    }

    /// Rank by Gaussian elimination over the coefficient field.
    pub fn rank<S: ScalarOps<C>>(&self, ops: &S) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let pivot = match (row..a.rows).find(|&r| !a.at(r, col).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for j in 0..a.cols {
                    let tmp = a.at(row, j).clone();
                    a.set(row, j, a.at(pivot, j).clone());
                    a.set(pivot, j, tmp);
                }
            }
            let p = ops.inv(a.at(row, col)).expect("nonzero pivot");
            for r in (row + 1)..a.rows {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let f = ops.mul(a.at(r, col), &p);
                for j in col..a.cols {
                    let v = ops.sub(a.at(r, j), &ops.mul(&f, a.at(row, j)));
                    a.set(r, j, v);
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }
}

impl<C: Scalar> std::fmt::Display for ScalarMat<C> {
    /// Row-major text form: rows on separate lines, entries in the scalar
    /// grammar separated by ", ".
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix with entries in U_q^{⊗n}.
#[derive(Clone, PartialEq, Debug)]
pub struct ElemMat<C: Scalar> {
    pub dim: usize,
    pub arity: usize,
    entries: Vec<TensorElement<C>>,
}

impl<C: Scalar> ElemMat<C> {
    pub fn from_fn(
        dim: usize,
        arity: usize,
        mut f: impl FnMut(usize, usize) -> TensorElement<C>,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let e = f(i, j);
                assert_eq!(e.arity(), arity);
                entries.push(e);
            }
        }
        ElemMat { dim, arity, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &TensorElement<C> {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TensorElement<C>) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// First nonzero entry, for residual witnesses.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &TensorElement<C>)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.at(i, j).is_zero() {
                    return Some((i, j, self.at(i, j)));
                }
            }
        }
        None
    }
}

impl<C: Scalar, S: ScalarOps<C>> PbwAlgebra<C, S> {
    pub fn mat_identity(&self, dim: usize, arity: usize) -> ElemMat<C> {
        ElemMat::from_fn(dim, arity, |i, j| {
            if i == j {
                self.tensor_one(arity)
            } else {
                self.tensor_zero(arity)
            }
        })
    }

    pub fn mat_mul(&self, a: &ElemMat<C>, b: &ElemMat<C>) -> ElemMat<C> {
        assert_eq!(a.dim, b.dim);
        ElemMat::from_fn(a.dim, a.arity, |i, j| {
            let mut acc = self.tensor_zero(a.arity);
            for k in 0..a.dim {
                acc = self.tensor_add(&acc, &self.tensor_mul(a.at(i, k), b.at(k, j)));
            }
            acc
        })
    }

    pub fn mat_add(&self, a: &ElemMat<C>, b: &ElemMat<C>) -> ElemMat<C> {
        ElemMat::from_fn(a.dim, a.arity, |i, j| self.tensor_add(a.at(i, j), b.at(i, j)))
    }

    pub fn mat_sub(&self, a: &ElemMat<C>, b: &ElemMat<C>) -> ElemMat<C> {
        ElemMat::from_fn(a.dim, a.arity, |i, j| self.tensor_sub(a.at(i, j), b.at(i, j)))
    }

    /// Apply a numeric matrix on the left: (N · A)_{ij} = Σ_k N_{ik} A_{kj}.
    pub fn mat_scalar_left(&self, n: &ScalarMat<C>, a: &ElemMat<C>) -> ElemMat<C> {
        assert_eq!(n.cols, a.dim);
        ElemMat::from_fn(a.dim, a.arity, |i, j| {
            let mut acc = self.tensor_zero(a.arity);
            for k in 0..a.dim {
                if n.at(i, k).is_zero() {
                    continue;
                }
                acc = self.tensor_add(&acc, &self.tensor_scale(a.at(k, j), n.at(i, k)));
            }
            acc
        })
    }

    /// Apply a numeric matrix on the right.
    pub fn mat_scalar_right(&self, a: &ElemMat<C>, n: &ScalarMat<C>) -> ElemMat<C> {
        assert_eq!(n.rows, a.dim);
        ElemMat::from_fn(a.dim, a.arity, |i, j| {
            let mut acc = self.tensor_zero(a.arity);
            for k in 0..a.dim {
                if n.at(k, j).is_zero() {
                    continue;
                }
                acc = self.tensor_add(&acc, &self.tensor_scale(a.at(i, k), n.at(k, j)));
            }
            acc
        })
    }

    /// M ⊗ id_d: entries of `a` placed on the first tensor-leg of a d·dim
    /// square matrix.
    pub fn mat_leg1(&self, a: &ElemMat<C>, d: usize) -> ElemMat<C> {
        ElemMat::from_fn(a.dim * d, a.arity, |i, j| {
            let (i1, i2) = (i / d, i % d);
            let (j1, j2) = (j / d, j % d);
            if i2 == j2 {
                a.at(i1, j1).clone()
            } else {
                self.tensor_zero(a.arity)
            }
        })
    }

    /// id_d ⊗ M.
    pub fn mat_leg2(&self, a: &ElemMat<C>, d: usize) -> ElemMat<C> {
        ElemMat::from_fn(a.dim * d, a.arity, |i, j| {
            let (i1, i2) = (i / a.dim, i % a.dim);
            let (j1, j2) = (j / a.dim, j % a.dim);
            if i1 == j1 {
                a.at(i2, j2).clone()
            } else {
                self.tensor_zero(a.arity)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GenericQ, RatFunc};

    #[test]
    fn scalar_inverse_roundtrip() {
        let ops = GenericQ;
        let m = ScalarMat::from_fn(2, 2, |i, j| {
            RatFunc::v_pow((i * 2 + j) as i64).add(&RatFunc::from_i64(if i == j { 2 } else { 0 }))
        });
        let inv = m.inverse(&ops).unwrap();
        assert_eq!(m.mul(&ops, &inv), ScalarMat::identity(&ops, 2));
    }

    #[test]
    fn kron_and_flip() {
        let ops = GenericQ;
        let a = ScalarMat::from_fn(2, 2, |i, j| RatFunc::from_i64((2 * i + j) as i64));
        let id = ScalarMat::identity(&ops, 2);
        let a1 = a.kron(&ops, &id);
        let a2 = id.kron(&ops, &a);
        // flip ∘ (A ⊗ I) ∘ flip = I ⊗ A
        assert_eq!(a1.flip_conjugate(2), a2);
    }

    #[test]
    fn rank_detects_dependence() {
        let ops = GenericQ;
        let m = ScalarMat::from_fn(3, 2, |i, j| RatFunc::from_i64(((i + 1) * (j + 1)) as i64));
        assert_eq!(m.rank(&ops), 1);
    }
}
