//! Dense matrices over a [`Coeff`] ring and the eliminations built on them.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::exact::{Coeff, Field, LaurentPoly, RatFunc};

#[derive(Clone, PartialEq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize, zero: &C) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, one: &C) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { one.one_like() } else { one.zero_like() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Matrix<D>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise [`Coeff::bar`].
    pub fn bar(&self) -> Self {
        self.map(Coeff::bar)
    }

    /// Transpose of [`Matrix::bar`].
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).bar())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let zero = self.any_elem().or_else(|| o.any_elem()).map(|c| c.zero_like());
        Self::from_fn(self.rows, o.cols, |i, j| {
            let mut acc: Option<C> = None;
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = o.get(k, j);
                if b.is_zero() {
                    continue;
                }
                let t = a.mul_ref(b);
                acc = Some(match acc {
                    None => t,
                    Some(s) => s.add_ref(&t),
                });
            }
            acc.or_else(|| zero.clone()).expect("empty matrices have no entries")
        })
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(v[0].zero_like(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc.add_ref(&a.mul_ref(b)) })
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self = adjoint(self)`.
    pub fn is_self_adjoint(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).bar()))
    }

    /// Rows and columns reordered: entry `(i, j)` of the result is `(p[i], p[j])`.
    pub fn permuted(&self, p: &[usize]) -> Self {
        assert!(self.is_square() && p.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(p[i], p[j]).clone())
    }

    fn any_elem(&self) -> Option<&C> {
        self.data.first()
    }
}

impl<C: Field> Matrix<C> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, col).inv();
            for j in 0..a.cols {
                let v = a.get(r, j).mul_ref(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.get(i, col).is_zero() {
                    let f = a.get(i, col).clone();
                    for j in 0..a.cols {
                        if !a.get(r, j).is_zero() {
                            let v = a.get(i, j).sub_ref(&f.mul_ref(a.get(r, j)));
                            a.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let one = self.any_elem()?.one_like();
        let id = Self::identity(n, &one);
        let aug = Self::from_fn(n, 2 * n, |i, j| if j < n { self.get(i, j).clone() } else { id.get(i, j - n).clone() });
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| red.get(i, j + n).clone()))
    }

    pub fn det(&self) -> C {
        assert!(self.is_square());
        let mut a = self.clone();
        let n = a.rows;
        let mut det = self.any_elem().expect("nonempty").one_like();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a.get(i, col).is_zero()) else {
                return det.zero_like();
            };
            if p != col {
                a.swap_rows(p, col);
                det = det.neg_ref();
            }
            let piv = a.get(col, col).clone();
            det = det.mul_ref(&piv);
            let inv = piv.inv();
            for i in col + 1..n {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).mul_ref(&inv);
                for j in col..n {
                    let v = a.get(i, j).sub_ref(&f.mul_ref(a.get(col, j)));
                    a.set(i, j, v);
                }
            }
        }
        det
    }
}

impl<C: Coeff> Matrix<C> {
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Fraction-free (Bareiss) determinant in `Z[q, q^{-1}]`.
pub fn det_bareiss(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap_rows(k, p);
            sign = !sign;
        }
        let piv = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = piv.mul_ref(a.get(i, j)).sub_ref(&a.get(i, k).mul_ref(a.get(k, j)));
                let v = v.exact_div(&prev).expect("Bareiss division is exact");
                a.set(i, j, v);
            }
            a.set(i, k, LaurentPoly::zero());
        }
        prev = piv;
    }
    let d = a.get(n - 1, n - 1).clone();
    if sign {
        d.neg_ref()
    } else {
        d
    }
}

/// Valuations at `Φ_e` of the elementary divisors of `m` over the local ring
/// `Q[q]_(Φ_e)`, in increasing order. Zero divisors (rank deficiency over
/// `Q(q)`) are reported as `None` after the finite ones.
pub fn local_smith_valuations(m: &Matrix<RatFunc>, e: usize) -> Vec<Option<i64>> {
    let mut a = m.clone();
    let n = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // pivot of minimal valuation in the trailing block
        let mut best: Option<(i64, usize, usize)> = None;
        for i in k..a.rows() {
            for j in k..a.cols() {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let v = x.cyclotomic_valuation(e);
                if best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, pi, pj)) = best else {
            out.extend(std::iter::repeat(None).take(n - k));
            break;
        };
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        out.push(Some(v));
        let inv = a.get(k, k).inv();
        for i in k + 1..a.rows() {
            if a.get(i, k).is_zero() {
                continue;
            }
            let f = a.get(i, k).mul_ref(&inv);
            for j in k..a.cols() {
                let v = a.get(i, j).sub_ref(&f.mul_ref(a.get(k, j)));
                a.set(i, j, v);
            }
        }
        // the column operations are implied: once row k is used as pivot row the
        // remaining entries of row k do not affect later valuations
        for j in k + 1..a.cols() {
            a.set(k, j, RatFunc::zero());
        }
    }
    out
}

impl<C: Coeff + fmt::Display> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl<C: Coeff + Serialize> Serialize for Matrix<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CycloNum;
    use proptest::prelude::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t)
    }

    #[test]
    fn bareiss_matches_field_determinant() {
        let m = Matrix::from_rows(vec![
            vec![lp(&[(0, 1), (1, 1)]), lp(&[(1, 1)]), LaurentPoly::zero()],
            vec![lp(&[(1, 1)]), lp(&[(0, 2), (-1, 1)]), lp(&[(0, 1)])],
            vec![LaurentPoly::zero(), lp(&[(0, 1)]), lp(&[(2, 1), (0, -1)])],
        ]);
        let d = det_bareiss(&m);
        let f = m.map(LaurentPoly::to_ratfunc).det();
        assert_eq!(f.to_laurent(), Some(d));
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = Matrix::from_rows(vec![vec![LaurentPoly::zero(), lp(&[(0, 1)])], vec![lp(&[(1, 1)]), lp(&[(0, 3)])]]);
        assert_eq!(det_bareiss(&m), lp(&[(1, -1)]));
    }

    #[test]
    fn inverse_and_rank() {
        let z = |k| CycloNum::zeta_pow(5, k);
        let m = Matrix::from_rows(vec![vec![z(1), z(2)], vec![z(3), z(0)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_rows(vec![vec![z(1), z(2)], vec![z(2), z(3)]]);
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn local_smith_diagonal() {
        let phi3 = RatFunc::from_poly(crate::exact::ipoly::cyclotomic(3).to_vec());
        let q = RatFunc::q();
        // diag(Φ3², q, Φ3) mixed by a unimodular change of basis
        let d = Matrix::from_rows(vec![
            vec![phi3.mul_ref(&phi3), RatFunc::zero(), RatFunc::zero()],
            vec![RatFunc::zero(), q.clone(), RatFunc::zero()],
            vec![RatFunc::zero(), RatFunc::zero(), phi3.clone()],
        ]);
        let u = Matrix::from_rows(vec![
            vec![RatFunc::one(), q.clone(), RatFunc::zero()],
            vec![RatFunc::zero(), RatFunc::one(), RatFunc::constant(2)],
            vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()],
        ]);
        let m = u.transpose().mul(&d).mul(&u);
        assert_eq!(local_smith_valuations(&m, 3), vec![Some(0), Some(1), Some(2)]);
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_elimination(v in prop::collection::vec((-2i64..3, -2i64..3), 9)) {
            let m = Matrix::from_fn(3, 3, |i, j| {
                let (a, b) = v[3 * i + j];
                lp(&[(0, a), (1, b)])
            });
            let d = det_bareiss(&m);
            let f = m.map(LaurentPoly::to_ratfunc).det();
            prop_assert_eq!(f.to_laurent(), Some(d));
        }
    }
}
