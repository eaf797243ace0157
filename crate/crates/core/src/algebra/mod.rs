//! Coefficient fields, Laurent polynomials and polynomial matrices.

mod cyclo8;
mod laurent;
mod matrix;
mod ratfn;
mod sampled;
mod scalar;
mod univariate;

pub use cyclo8::Cyclo8;
pub use laurent::{Exp, LaurentPoly2, Normalized};
pub use matrix::PolyMatrix;
pub use ratfn::RatFn2;
pub use scalar::{Approx, Backend, CoeffText, Scalar, TurnAngle, DEFAULT_TOL};
pub use univariate::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial is not a polynomial in lambda alone")]
    NotUnivariate,
    #[error("weight literals mix exact and floating forms")]
    MixedBackend,
    #[error("malformed weight literal: {0}")]
    BadLiteral(String),
    #[error("turning angle is not a multiple of pi/2; use the float backend")]
    NonAxisParallelInExactMode,
    #[error("operation requires the exact backend")]
    FloatBackendUnsupported,
}

/// Sign pairs in the order they are tried when matching up to spin.
pub const SPIN_ORDER: [(i8, i8); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];

/// First sign pair `(e1, e2)` with `p(e1 lambda, e2 mu)` equal to `q` up to a
/// monomial factor.
pub fn lp_equal_up_to_spin<S: Scalar>(p: &LaurentPoly2<S>, q: &LaurentPoly2<S>, tol: f64) -> Result<Option<(i8, i8)>, AlgebraError> {
    let target = q.canonical()?;
    for (e1, e2) in SPIN_ORDER {
        if p.substitute_signs(e1, e2).canonical()?.approx_eq(&target, tol) {
            return Ok(Some((e1, e2)));
        }
    }
    Ok(None)
}

/// Monic gcd of `K(lambda, 0)` and every `mu`-coefficient of `K`; `K` is
/// first shifted so both minimal degrees vanish.
pub fn gcd_for_lambda_divisor<S: Scalar>(k: &LaurentPoly2<S>) -> Result<LaurentPoly2<S>, AlgebraError> {
    if S::BACKEND == Backend::Float {
        return Err(AlgebraError::FloatBackendUnsupported);
    }
    if k.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (a, b) = k.min_exponents();
    let k = k.shift(-a, -b);
    // K(lambda, 0) is the mu^0 coefficient, so it is among the coefficients
    let mut g: Option<UniPoly<S>> = None;
    for (_, c) in k.mu_coefficients() {
        let c = UniPoly::from_laurent(&c)?;
        g = Some(match g {
            None => c.monic()?,
            Some(g) => g.gcd(&c)?,
        });
    }
    Ok(g.expect("nonzero polynomial").to_laurent())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    fn poly(t: &[(i64, i64, i64)]) -> LaurentPoly2<Cyclo8> {
        LaurentPoly2::from_terms(t.iter().map(|&(v, i, j)| (c(v), i, j)))
    }

    #[test]
    fn spin_matching_order() {
        assert_eq!(lp_equal_up_to_spin(&poly(&[(1, 0, 0), (1, 1, 0)]), &poly(&[(1, 0, 0), (-1, 1, 0)]), 0.0).unwrap(), Some((-1, 1)));
        let sq = poly(&[(1, 0, 0), (-2, 0, 1), (1, 0, 2)]);
        assert_eq!(lp_equal_up_to_spin(&sq, &sq, 0.0).unwrap(), Some((1, 1)));
        let p = poly(&[(1, 0, 1), (-1, 1, 0)]);
        let q = poly(&[(1, 0, 1), (1, 1, 0)]);
        assert_eq!(lp_equal_up_to_spin(&p, &q, 0.0).unwrap(), Some((-1, 1)));
        assert_eq!(lp_equal_up_to_spin(&poly(&[(1, 0, 0), (3, 1, 0)]), &poly(&[(1, 0, 0), (2, 1, 0)]), 0.0).unwrap(), None);
    }

    #[test]
    fn lambda_divisor() {
        // (1 - lambda)(1 - mu)
        let k = poly(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1), (1, 1, 1)]);
        assert_eq!(gcd_for_lambda_divisor(&k).unwrap(), poly(&[(-1, 0, 0), (1, 1, 0)]));
        let sq = poly(&[(1, 0, 0), (-2, 0, 1), (1, 0, 2)]);
        assert_eq!(gcd_for_lambda_divisor(&sq).unwrap(), poly(&[(1, 0, 0)]));
        // x4 x5 - (x3 x4 + x5 x6) mu + x3 x6 mu^2 with x3..x6 = 5..8
        let ex = poly(&[(6 * 7, 0, 0), (-(5 * 6 + 7 * 8), 0, 1), (5 * 8, 0, 2)]);
        assert_eq!(gcd_for_lambda_divisor(&ex).unwrap(), poly(&[(1, 0, 0)]));
        let f = gcd_for_lambda_divisor(&poly(&[(1, 0, 0), (1, 1, 0)]).shift(2, -1)).unwrap();
        assert_eq!(f, poly(&[(1, 0, 0), (1, 1, 0)]));
    }
}
