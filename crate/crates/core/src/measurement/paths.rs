//! Boundary path matrices, boundary measurements and characteristic
//! polynomials.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Backend, LaurentPoly2, PolyMatrix, RatFn2, Scalar};
use crate::network::{turning_numbers, NetworkError, PerfectNetwork};

use super::adjacency::adjacency_matrix;
use super::cylinder::{CylinderNetwork, Node};
use super::{BoundaryMatrix, MeasurementError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `det(I - mu B)` over rational functions in `lambda`.
    Direct,
    /// Ratio of determinants of the glued adjacency matrix at `mu` and at 0.
    #[default]
    Ratio,
}

/// Reduced form for the exact backend; for floats, scaled so the lowest
/// coefficient of the denominator is 1.
pub(crate) fn reduce<S: Scalar>(r: RatFn2<S>) -> Result<RatFn2<S>, AlgebraError> {
    if S::BACKEND == Backend::Exact {
        return r.canonical();
    }
    let (a, _) = r.den.min_exponents();
    let lead = r.den.shift(-a, 0).min_term().map(|(_, c)| c.clone()).ok_or(AlgebraError::DivisionByZero)?;
    let inv = lead.inv()?;
    Ok(RatFn2 { num: r.num.shift(-a, 0).scale(&inv), den: r.den.shift(-a, 0).scale(&inv) })
}

fn lambda_shift<S: Scalar>(ms: &[&PolyMatrix<S>]) -> i64 {
    let mut lo = 0;
    for m in ms {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if let Some((a, _)) = m.get(i, j).lambda_range() {
                    lo = lo.min(a);
                }
            }
        }
    }
    -lo
}

/// `(d, X * dZ)` with `(I - A) Z = Y` and `d = det(I - A)` up to sign.
fn solve_paths<S: Scalar>(c: &CylinderNetwork<S>) -> Result<(LaurentPoly2<S>, PolyMatrix<S>), MeasurementError> {
    let m = c.num_internal();
    let lhs = PolyMatrix::identity(m).sub(&c.a_hat());
    let y = c.y();
    let s = lambda_shift(&[&lhs, &y]);
    let shift = |p: &LaurentPoly2<S>| p.shift(s, 0);
    let (d, z) = lhs.map(shift).solve_fraction_free(&y.map(shift)).map_err(|e| match e {
        AlgebraError::Singular => MeasurementError::SingularPathSystem,
        e => e.into(),
    })?;
    if d.is_zero() {
        return Err(MeasurementError::SingularPathSystem);
    }
    Ok((d, c.x().mul(&z)))
}

/// Sums of weights of all directed paths from each source to each sink.
pub fn boundary_path_matrix<S: Scalar>(c: &CylinderNetwork<S>) -> Result<BoundaryMatrix<S>, MeasurementError> {
    let n = c.sources;
    if n == 0 {
        return Ok(BoundaryMatrix { entries: Vec::new() });
    }
    let (d, num) = solve_paths(c)?;
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(reduce(RatFn2::new(num.get(i, j).clone(), d.clone())?)?);
        }
        entries.push(row);
    }
    Ok(BoundaryMatrix { entries })
}

/// The network with white-to-black weights multiplied by turning numbers.
pub fn turn_weighted<S: Scalar>(n: &PerfectNetwork<S>) -> Result<PerfectNetwork<S>, MeasurementError> {
    if !n.graph.is_bipartite() {
        return Err(NetworkError::NotBipartite.into());
    }
    let t = turning_numbers(n)?;
    let w: Vec<S> = n
        .graph
        .edges()
        .iter()
        .map(|e| match t.turn_of(e.id) {
            Some(k) => e.weight.clone() * k,
            None => e.weight.clone(),
        })
        .collect();
    Ok(PerfectNetwork::new(n.graph.with_weights(&w)))
}

/// Boundary measurements with signs from turning numbers. With `gstv`, the
/// other sign convention (`lambda -> -lambda`).
pub fn boundary_measurement_matrix<S: Scalar>(n: &PerfectNetwork<S>, gstv: bool) -> Result<BoundaryMatrix<S>, MeasurementError> {
    let c = super::cut_to_cylinder(&turn_weighted(n)?)?;
    let m = boundary_path_matrix(&c)?;
    Ok(if gstv { m.flip_lambda() } else { m })
}

/// `det(I - mu B)` as a rational function whose `mu`-constant term is 1.
pub fn charpoly_boundary<S: Scalar>(c: &CylinderNetwork<S>, method: Method) -> Result<RatFn2<S>, MeasurementError> {
    let n = c.sources;
    if n == 0 {
        return Ok(RatFn2::new(LaurentPoly2::one(), LaurentPoly2::one())?);
    }
    let r = match method {
        Method::Direct => {
            let (d, xz) = solve_paths(c)?;
            let mu = LaurentPoly2::mu();
            let m = PolyMatrix::identity(n).scale(&d).sub(&xz.scale(&mu));
            let mut dn = LaurentPoly2::one();
            for _ in 0..n {
                dn = &dn * &d;
            }
            RatFn2::new(m.det()?, dn)?
        }
        Method::Ratio => {
            let m = c.num_internal();
            let den = PolyMatrix::identity(m).sub(&c.a_hat()).det()?;
            if den.is_zero() {
                return Err(MeasurementError::SingularPathSystem);
            }
            RatFn2::new(PolyMatrix::identity(m).sub(&c.a_bar()).det()?, den)?
        }
    };
    Ok(reduce(r)?)
}

/// RATIO result after checking it against DIRECT.
pub fn charpoly_checked<S: Scalar>(c: &CylinderNetwork<S>, tol: f64) -> Result<RatFn2<S>, MeasurementError> {
    let r = charpoly_boundary(c, Method::Ratio)?;
    let d = charpoly_boundary(c, Method::Direct)?;
    if !r.approx_eq(&d, tol) {
        return Err(MeasurementError::MethodMismatch(format!("ratio {r} vs direct {d}")));
    }
    Ok(r)
}

/// `det(I - A(lambda, mu)) / det(I - A(lambda, 0))` for the full adjacency
/// matrix on the torus.
pub fn torus_ratio<S: Scalar>(n: &PerfectNetwork<S>) -> Result<RatFn2<S>, MeasurementError> {
    let a = adjacency_matrix(&n.graph);
    let k = a.rows();
    let num = PolyMatrix::identity(k).sub(&a).det()?;
    let den = PolyMatrix::identity(k).sub(&a.evaluate_mu(&S::zero())?).det()?;
    if den.is_zero() {
        return Err(MeasurementError::SingularPathSystem);
    }
    Ok(reduce(RatFn2::new(num, den)?)?)
}

/// Path sums by depth-first enumeration; fails on networks with a
/// directed cycle.
pub fn enumerate_paths<S: Scalar>(c: &CylinderNetwork<S>) -> Result<BoundaryMatrix<S>, MeasurementError> {
    let n = c.sources;
    let m = c.num_internal();
    let mut out: Vec<Vec<LaurentPoly2<S>>> = vec![vec![LaurentPoly2::zero(); n]; n];
    fn walk<S: Scalar>(
        c: &CylinderNetwork<S>,
        at: usize,
        acc: &LaurentPoly2<S>,
        on_stack: &mut Vec<bool>,
        row: &mut [LaurentPoly2<S>],
    ) -> Result<(), MeasurementError> {
        if on_stack[at] {
            return Err(MeasurementError::Cyclic);
        }
        on_stack[at] = true;
        for e in c.edges.iter().filter(|e| e.from == Node::Internal(at)) {
            let w = acc * &e.weight;
            match e.to {
                Node::Sink(s) => row[s] = &row[s] + &w,
                Node::Internal(j) => walk(c, j, &w, on_stack, row)?,
                Node::Source(_) => unreachable!(),
            }
        }
        on_stack[at] = false;
        Ok(())
    }
    for (s, row) in out.iter_mut().enumerate() {
        for e in c.edges.iter().filter(|e| e.from == Node::Source(s)) {
            if let Node::Internal(j) = e.to {
                walk(c, j, &e.weight, &mut vec![false; m], row)?;
            }
        }
    }
    let entries = out
        .into_iter()
        .map(|row| row.into_iter().map(|p| RatFn2::new(p, LaurentPoly2::one())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoundaryMatrix { entries })
}

fn eval<S: Scalar>(m: &PolyMatrix<S>, lambda: &S) -> Result<Vec<Vec<S>>, AlgebraError> {
    let zero = S::zero();
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).evaluate(lambda, &zero)).collect()).collect()
}

fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(S::zero(), |acc, (x, brow)| acc + x.clone() * &brow[j]))
                .collect()
        })
        .collect()
}

/// `sum_{k <= depth} X A^k Y` evaluated at `lambda`.
pub fn series_at<S: Scalar>(c: &CylinderNetwork<S>, lambda: &S, depth: usize) -> Result<Vec<Vec<S>>, MeasurementError> {
    let (n, m) = (c.sources, c.num_internal());
    let x = eval(&c.x(), lambda)?;
    let a = eval(&c.a_hat(), lambda)?;
    let y = eval(&c.y(), lambda)?;
    let mut power = x;
    let mut sum = vec![vec![S::zero(); n]; n];
    for _ in 0..=depth {
        let term = mat_mul(&power, &y, n);
        for i in 0..n {
            for j in 0..n {
                sum[i][j] = sum[i][j].clone() + &term[i][j];
            }
        }
        power = mat_mul(&power, &a, m);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Approx, Cyclo8};
    use crate::instances::{example1, example1_exact, random_positive};
    use crate::measurement::{cut_to_cylinder, random_cylinder, CylEdge};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly2<Cyclo8> {
        LaurentPoly2::from_terms(terms.iter().map(|&(k, i, j)| (c(k), i, j)))
    }

    #[test]
    fn example1_matrix() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], false));
        let cyl = cut_to_cylinder(&n).unwrap();
        assert_eq!(cyl.sources, 2);
        let m = boundary_measurement_matrix(&n, false).unwrap();
        let expect = [[lp(&[(55, 0, 0)]), lp(&[(273, 0, 0), (182, 1, 0)])], [lp(&[]), lp(&[(91, 0, 0)])]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j).num, expect[i][j], "entry {i},{j}");
                assert_eq!(m.get(i, j).den, LaurentPoly2::one());
            }
        }
        assert_eq!(boundary_path_matrix(&cyl).unwrap(), m);
        // cutting breaks the only directed cycle
        assert_eq!(enumerate_paths(&cyl).unwrap(), m);
        let gstv = boundary_measurement_matrix(&n, true).unwrap();
        assert_eq!(gstv.get(0, 1).num, lp(&[(273, 0, 0), (-182, 1, 0)]));
    }

    #[test]
    fn example1_charpoly() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], false));
        let cyl = cut_to_cylinder(&turn_weighted(&n).unwrap()).unwrap();
        let expect = &lp(&[(1, 0, 0), (-55, 0, 1)]) * &lp(&[(1, 0, 0), (-91, 0, 1)]);
        for m in [Method::Direct, Method::Ratio] {
            let r = charpoly_boundary(&cyl, m).unwrap();
            assert_eq!(r.num, expect);
            assert_eq!(r.den, LaurentPoly2::one());
        }
        assert_eq!(torus_ratio(&turn_weighted(&n).unwrap()).unwrap().num, expect);
    }

    #[test]
    fn switched_example_is_trivial() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], true));
        let cyl = cut_to_cylinder(&turn_weighted(&n).unwrap()).unwrap();
        let m = boundary_path_matrix(&cyl).unwrap();
        assert!(m.entries.iter().flatten().all(|r| r.num.is_zero()));
        for meth in [Method::Direct, Method::Ratio] {
            let r = charpoly_boundary(&cyl, meth).unwrap();
            assert_eq!((r.num, r.den), (LaurentPoly2::one(), LaurentPoly2::one()));
        }
    }

    #[test]
    fn chain_and_loop() {
        let e = |from, to, w: LaurentPoly2<Cyclo8>| CylEdge { from, to, weight: w, origin: None };
        let (a, b) = (lp(&[(2, 0, 0)]), lp(&[(3, 1, 0)]));
        let chain = CylinderNetwork::new(
            vec![None],
            1,
            vec![e(Node::Source(0), Node::Internal(0), a.clone()), e(Node::Internal(0), Node::Sink(0), b.clone())],
        )
        .unwrap();
        let m = boundary_path_matrix(&chain).unwrap();
        assert_eq!(m.get(0, 0).num, &a * &b);
        assert_eq!(enumerate_paths(&chain).unwrap(), m);

        // detour v -> u -> v of weight q = 1/4 * 1/2
        let r = |x: f64| LaurentPoly2::constant(Approx::real(x));
        let f = |from, to, w| CylEdge { from, to, weight: w, origin: None };
        let looped = CylinderNetwork::new(
            vec![None, None],
            1,
            vec![
                f(Node::Source(0), Node::Internal(0), r(2.0)),
                f(Node::Internal(0), Node::Internal(1), r(0.25)),
                f(Node::Internal(1), Node::Internal(0), r(0.5)),
                f(Node::Internal(0), Node::Sink(0), r(3.0)),
            ],
        )
        .unwrap();
        let b = boundary_path_matrix(&looped).unwrap().evaluate(&Approx::real(1.0)).unwrap();
        let s = series_at(&looped, &Approx::real(1.0), 30).unwrap();
        let q: f64 = 0.125;
        let geometric: f64 = (0..=30).map(|k| 6.0 * q.powi(k)).sum();
        assert!((s[0][0].0.re - geometric).abs() < 1e-12);
        assert!((b[0][0].0.re - 6.0 / (1.0 - q)).abs() < 1e-9);
    }

    #[test]
    fn random_ratio_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let n = rng.gen_range(1..=3);
            let m = rng.gen_range(1..=4);
            let cyl = random_cylinder(&mut rng, n, m, 0.4, |r| random_positive(r, 7));
            let Ok(b) = boundary_path_matrix(&cyl) else { continue };
            let d = charpoly_boundary(&cyl, Method::Direct).unwrap();
            let r = charpoly_boundary(&cyl, Method::Ratio).unwrap();
            assert_eq!(d, r);
            assert_eq!(r.num.mu_coefficient(0), r.den);
            assert_eq!(b.size(), n);
        }
    }

    #[test]
    fn float_matches_exact() {
        let w = [2.0, 3.0, 5.0, 7.0, 11.0, 13.0].map(Approx::real);
        let n = PerfectNetwork::new(example1(&w, false));
        let m = boundary_measurement_matrix(&n, false).unwrap();
        let v = m.evaluate(&Approx::real(1.0)).unwrap();
        assert!((v[0][1].0.re - 455.0).abs() < 1e-9);
        let cyl = cut_to_cylinder(&turn_weighted(&n).unwrap()).unwrap();
        assert!(charpoly_checked(&cyl, 1e-9).is_ok());
    }
}
