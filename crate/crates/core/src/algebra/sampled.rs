//! Determinants and linear solves over the floating backend by sampling on
//! the unit torus and interpolating with an inverse discrete Fourier
//! transform. Fraction-free elimination loses too much accuracy there.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::laurent::LaurentPoly2;
use super::scalar::Scalar;
use super::AlgebraError;

// keeps sample points off accidental zeros of the determinant
const OFFSET: (f64, f64) = (0.271_828, 0.577_215);

struct Grid {
    n: (usize, usize),
}

impl Grid {
    /// Large enough for polynomials with the given degree bounds.
    fn new(deg: (i64, i64)) -> Self {
        Grid { n: (deg.0 as usize + 1, deg.1 as usize + 1) }
    }

    fn points(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let (na, nb) = self.n;
        (0..na).flat_map(move |a| {
            (0..nb).map(move |b| {
                (
                    Complex64::from_polar(1.0, OFFSET.0 + TAU * a as f64 / na as f64),
                    Complex64::from_polar(1.0, OFFSET.1 + TAU * b as f64 / nb as f64),
                )
            })
        })
    }

    /// Coefficients from values at [`Grid::points`]; `scale` bounds the
    /// size of the rounding errors in `values`.
    fn interpolate<S: Scalar>(&self, values: &[Complex64], scale: f64) -> LaurentPoly2<S> {
        let (na, nb) = self.n;
        let cutoff = 1e-12 * scale;
        let clean = |x: f64| if x.abs() <= cutoff { 0.0 } else { x };
        let mut terms = Vec::new();
        for p in 0..na {
            for q in 0..nb {
                let mut acc = Complex64::new(0.0, 0.0);
                for a in 0..na {
                    for b in 0..nb {
                        let angle = (OFFSET.0 + TAU * a as f64 / na as f64) * p as f64
                            + (OFFSET.1 + TAU * b as f64 / nb as f64) * q as f64;
                        acc += values[a * nb + b] * Complex64::from_polar(1.0, -angle);
                    }
                }
                acc /= (na * nb) as f64;
                let c = Complex64::new(clean(acc.re), clean(acc.im));
                if c.norm() > 0.0 {
                    terms.push((S::from_complex(c).expect("floating backend"), p as i64, q as i64));
                }
            }
        }
        LaurentPoly2::from_terms(terms)
    }
}

/// Gaussian elimination with partial pivoting on `a | b`. Returns the
/// determinant of `a` and, when it is nonzero, the solution `x` scaled by it.
fn eliminate(mut a: Vec<Vec<Complex64>>, mut b: Vec<Vec<Complex64>>) -> (Complex64, Option<Vec<Vec<Complex64>>>) {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm())).unwrap();
        if a[p][k].norm() == 0.0 {
            return (Complex64::new(0.0, 0.0), None);
        }
        if p != k {
            a.swap(p, k);
            b.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            let (top, bottom) = a.split_at_mut(i);
            for (x, v) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= f * v;
            }
            let (top, bottom) = b.split_at_mut(i);
            for (x, v) in bottom[0].iter_mut().zip(&top[k]) {
                *x -= f * v;
            }
        }
    }
    let cols = b.first().map_or(0, Vec::len);
    let mut x = vec![vec![Complex64::new(0.0, 0.0); cols]; n];
    for j in 0..cols {
        for i in (0..n).rev() {
            let mut s = b[i][j];
            for k in i + 1..n {
                s -= a[i][k] * x[k][j];
            }
            x[i][j] = s / a[i][i];
        }
    }
    for row in &mut x {
        for v in row.iter_mut() {
            *v *= det;
        }
    }
    (det, Some(x))
}

fn eval_all<S: Scalar>(m: &[Vec<&LaurentPoly2<S>>], l: Complex64, u: Complex64) -> Vec<Vec<Complex64>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|p| p.terms().map(|(&(i, j), c)| c.to_complex() * l.powi(i as i32) * u.powi(j as i32)).sum())
                .collect()
        })
        .collect()
}

/// Product of the row sums of absolute values, a bound for every minor.
fn hadamard(m: &[Vec<Complex64>]) -> f64 {
    m.iter().map(|row| row.iter().map(|v| v.norm()).sum::<f64>().max(1.0)).product()
}

/// Sum over rows of the largest exponents in the row; bounds every minor.
fn degree_bound<S: Scalar>(rows: &[Vec<&LaurentPoly2<S>>]) -> (i64, i64) {
    let mut d = (0, 0);
    for row in rows {
        let hi = row.iter().fold((0, 0), |acc, p| {
            (acc.0.max(p.lambda_range().map_or(0, |r| r.1)), acc.1.max(p.mu_range().map_or(0, |r| r.1)))
        });
        d = (d.0 + hi.0, d.1 + hi.1);
    }
    d
}

/// Determinant of a square matrix of polynomials.
pub(crate) fn det<S: Scalar>(a: &[Vec<&LaurentPoly2<S>>]) -> LaurentPoly2<S> {
    let grid = Grid::new(degree_bound(a));
    let mut scale: f64 = 0.0;
    let values: Vec<Complex64> = grid
        .points()
        .map(|(l, u)| {
            let m = eval_all(a, l, u);
            scale = scale.max(hadamard(&m));
            let rows = m.len();
            eliminate(m, vec![Vec::new(); rows]).0
        })
        .collect();
    grid.interpolate(&values, scale)
}

type Solved<S> = (LaurentPoly2<S>, Vec<Vec<LaurentPoly2<S>>>);

/// `(d, d * Z)` with `a Z = b` and `d = det(a)`.
pub(crate) fn solve<S: Scalar>(
    a: &[Vec<&LaurentPoly2<S>>],
    b: &[Vec<&LaurentPoly2<S>>],
) -> Result<Solved<S>, AlgebraError> {
    let joined: Vec<Vec<&LaurentPoly2<S>>> = a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect();
    let grid = Grid::new(degree_bound(&joined));
    let cols = b.first().map_or(0, Vec::len);
    let mut dets = Vec::new();
    let mut scale: f64 = 0.0;
    let mut sols: Vec<Vec<Vec<Complex64>>> = vec![vec![Vec::new(); cols]; a.len()];
    for (l, u) in grid.points() {
        scale = scale.max(hadamard(&eval_all(&joined, l, u)));
        let (d, x) = eliminate(eval_all(a, l, u), eval_all(b, l, u));
        let x = x.ok_or(AlgebraError::Singular)?;
        dets.push(d);
        for (i, row) in x.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                sols[i][j].push(v);
            }
        }
    }
    let d = grid.interpolate(&dets, scale);
    if d.is_zero() {
        return Err(AlgebraError::Singular);
    }
    let z = sols.iter().map(|row| row.iter().map(|v| grid.interpolate(v, scale)).collect()).collect();
    Ok((d, z))
}
