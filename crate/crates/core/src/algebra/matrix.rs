//! Dense matrices of Laurent polynomials.

use std::fmt;

use super::laurent::LaurentPoly2;
use super::sampled;
use super::scalar::{Backend, Scalar};
use super::AlgebraError;

#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly2<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![LaurentPoly2::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { LaurentPoly2::one() } else { LaurentPoly2::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly2<S>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly2<S>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly2<S> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly2<S>) {
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn accumulate(&mut self, i: usize, j: usize, v: &LaurentPoly2<S>) {
        let cur = &self.data[i * self.cols + j];
        self.data[i * self.cols + j] = cur + v;
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly2<S>) -> LaurentPoly2<S>) -> Self {
        PolyMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        Self::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = LaurentPoly2::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), o.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn scale(&self, c: &LaurentPoly2<S>) -> Self {
        self.map(|e| e * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn substitute_signs(&self, e1: i8, e2: i8) -> Self {
        self.map(|e| e.substitute_signs(e1, e2))
    }

    pub fn evaluate_mu(&self, mu: &S) -> Result<Self, AlgebraError> {
        let data = self.data.iter().map(|e| e.evaluate_mu(mu)).collect::<Result<_, _>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Smallest exponents over the nonzero entries of row `i`.
    fn row_min_exponents(&self, i: usize) -> (i64, i64) {
        let mut lo: Option<(i64, i64)> = None;
        for j in 0..self.cols {
            let e = self.get(i, j);
            if e.is_zero() {
                continue;
            }
            let m = e.min_exponents();
            lo = Some(match lo {
                None => m,
                Some(l) => (l.0.min(m.0), l.1.min(m.1)),
            });
        }
        lo.unwrap_or((0, 0))
    }

    /// Determinant by fraction-free (Bareiss) elimination. Laurent shifts are
    /// first factored out of each row so elimination runs over a polynomial ring.
    pub fn det(&self) -> Result<LaurentPoly2<S>, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly2::one());
        }
        let mut a = self.clone();
        let mut mono = (0i64, 0i64);
        for i in 0..n {
            let (x, y) = a.row_min_exponents(i);
            mono = (mono.0 + x, mono.1 + y);
            for j in 0..n {
                let v = a.get(i, j).shift(-x, -y);
                a.set(i, j, v);
            }
        }
        if S::BACKEND == Backend::Float {
            return Ok(sampled::det(&a.row_refs()).shift(mono.0, mono.1));
        }
        let mut negate = false;
        let mut prev = LaurentPoly2::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly2::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let t = &(&pivot * a.get(i, j)) - &(&aik * a.get(k, j));
                    let v = if k == 0 { t } else { t.exact_div(&prev)? };
                    a.set(i, j, v);
                }
                a.set(i, k, LaurentPoly2::zero());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).shift(mono.0, mono.1);
        Ok(if negate { -d } else { d })
    }

    fn row_refs(&self) -> Vec<Vec<&LaurentPoly2<S>>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            self.data.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    /// Solves `self * Z = rhs` without fractions: returns `(d, d * Z)` where
    /// `d` is the determinant of `self` (up to sign). Entries of `self` and
    /// `rhs` must be genuine polynomials.
    pub fn solve_fraction_free(&self, rhs: &Self) -> Result<(LaurentPoly2<S>, Self), AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols });
        }
        assert_eq!(rhs.rows, self.rows, "right-hand side height");
        if S::BACKEND == Backend::Float {
            let (d, z) = sampled::solve(&self.row_refs(), &rhs.row_refs())?;
            return Ok((d, Self::from_rows(z)));
        }
        let n = self.rows;
        let w = n + rhs.cols;
        let mut m = Self::from_fn(n, w, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - n).clone()
            }
        });
        let mut prev = LaurentPoly2::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => m.swap_rows(i, k),
                    None => return Err(AlgebraError::Singular),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let mik = m.get(i, k).clone();
                for j in k + 1..w {
                    let t = &(&pivot * m.get(i, j)) - &(&mik * m.get(k, j));
                    let v = if k == 0 { t } else { t.exact_div(&prev)? };
                    m.set(i, j, v);
                }
                m.set(i, k, LaurentPoly2::zero());
                if i < k {
                    m.set(i, i, pivot.clone());
                }
            }
            prev = pivot;
        }
        let sol = Self::from_fn(n, rhs.cols, |i, j| m.get(i, n + j).clone());
        Ok((prev, sol))
    }
}

impl<S: Scalar> fmt::Display for PolyMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;

    type P = LaurentPoly2<Cyclo8>;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn small_determinants() {
        let one_minus_mu = P::from_terms([(c(1), 0, 0), (c(-1), 0, 1)]);
        let m = PolyMatrix::from_rows(vec![vec![one_minus_mu.clone()]]);
        assert_eq!(m.det().unwrap(), one_minus_mu);

        let m = PolyMatrix::from_rows(vec![vec![P::one(), P::lambda()], vec![P::mu(), P::one()]]);
        assert_eq!(m.det().unwrap(), P::from_terms([(c(1), 0, 0), (c(-1), 1, 1)]));

        assert_eq!(PolyMatrix::<Cyclo8>::zeros(0, 0).det().unwrap(), P::one());
        assert!(matches!(PolyMatrix::<Cyclo8>::zeros(2, 3).det(), Err(AlgebraError::NonSquare { .. })));
    }

    #[test]
    fn pivoting_and_laurent_rows() {
        // [[0, lambda^-1], [mu, 1]] -> -lambda^-1 mu
        let m = PolyMatrix::from_rows(vec![
            vec![P::zero(), P::monomial(c(1), -1, 0)],
            vec![P::mu(), P::one()],
        ]);
        assert_eq!(m.det().unwrap(), P::monomial(c(-1), -1, 1));
    }

    #[test]
    fn fraction_free_solve() {
        // A = [[2, 1], [1, lambda]], b = [1, 0]
        let a = PolyMatrix::from_rows(vec![
            vec![P::constant(c(2)), P::one()],
            vec![P::one(), P::lambda()],
        ]);
        let b = PolyMatrix::from_rows(vec![vec![P::one()], vec![P::zero()]]);
        let (d, z) = a.solve_fraction_free(&b).unwrap();
        // A * z == d * b
        assert_eq!(a.mul(&z), b.scale(&d));
        let det = a.det().unwrap();
        assert!(d == det || d == -det);
        let sing = PolyMatrix::from_rows(vec![vec![P::one(), P::one()], vec![P::one(), P::one()]]);
        assert_eq!(sing.solve_fraction_free(&b).unwrap_err(), AlgebraError::Singular);
    }
}
