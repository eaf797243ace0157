//! Quotients `num / den` with a `mu`-free denominator.

use std::fmt;

use super::laurent::LaurentPoly2;
use super::scalar::{Backend, Scalar};
use super::univariate::UniPoly;
use super::AlgebraError;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFn2<S> {
    pub num: LaurentPoly2<S>,
    pub den: LaurentPoly2<S>,
}

impl<S: Scalar> RatFn2<S> {
    pub fn new(num: LaurentPoly2<S>, den: LaurentPoly2<S>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if !den.is_mu_free() {
            return Err(AlgebraError::NotUnivariate);
        }
        Ok(RatFn2 { num, den })
    }

    /// `p / p(lambda, 0)` after clearing the lowest power of `mu`.
    pub fn ratio_at_mu_zero(p: &LaurentPoly2<S>) -> Result<Self, AlgebraError> {
        let p = p.normalize_mu();
        let d = p.mu_coefficient(0);
        Self::new(p, d)
    }

    /// Reduced form: denominator monic with nonzero constant term, common
    /// `lambda`-factors removed. Exact backend only.
    pub fn canonical(&self) -> Result<Self, AlgebraError> {
        if S::BACKEND == Backend::Float {
            return Err(AlgebraError::FloatBackendUnsupported);
        }
        let (a, _) = self.den.min_exponents();
        let den = UniPoly::from_laurent(&self.den.shift(-a, 0))?;
        let mut num = self.num.shift(-a, 0);
        if num.is_zero() {
            return Ok(RatFn2 { num, den: LaurentPoly2::one() });
        }
        let mut g = den.clone();
        for (_, c) in num.mu_coefficients() {
            let (b, _) = c.min_exponents();
            g = g.gcd(&UniPoly::from_laurent(&c.shift(-b, 0))?)?;
            if g.degree() == Some(0) {
                break;
            }
        }
        let (q, _) = den.div_rem(&g)?;
        let lead = q.coeffs().last().cloned().ok_or(AlgebraError::ZeroPolynomial)?;
        let den = q.monic()?.to_laurent();
        let gl = g.to_laurent();
        num = num.exact_div(&gl)?.scale(&lead.inv()?);
        Ok(RatFn2 { num, den })
    }

    /// Equality as rational functions: reduced forms for the exact backend,
    /// cross-multiplication within `tol` for the floating one.
    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        if S::BACKEND == Backend::Exact {
            return match (self.canonical(), o.canonical()) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
        }
        let l = &self.num * &o.den;
        let r = &o.num * &self.den;
        l.approx_eq(&r, tol)
    }

    pub fn evaluate(&self, lambda: &S, mu: &S) -> Result<S, AlgebraError> {
        let d = self.den.evaluate(lambda, mu)?;
        self.num.evaluate(lambda, mu)?.div(&d)
    }

    pub fn substitute_signs(&self, e1: i8, e2: i8) -> Self {
        RatFn2 { num: self.num.substitute_signs(e1, e2), den: self.den.substitute_signs(e1, e2) }
    }
}

impl<S: Scalar> fmt::Display for RatFn2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly2::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Approx, Cyclo8};

    type P = LaurentPoly2<Cyclo8>;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn cancels_common_lambda_factor() {
        // (1 - lambda)(1 + mu) / (2 lambda (1 - lambda)) = (1 + mu) / (2 lambda)
        let f = P::from_terms([(c(1), 0, 0), (c(-1), 1, 0)]);
        let num = &f * &P::from_terms([(c(1), 0, 0), (c(1), 0, 1)]);
        let den = &f * &P::monomial(c(2), 1, 0);
        let r = RatFn2::new(num, den).unwrap().canonical().unwrap();
        assert_eq!(r.den, P::one());
        assert_eq!(r.num, P::from_terms([(Cyclo8::parse("1/2").unwrap(), -1, 0), (Cyclo8::parse("1/2").unwrap(), -1, 1)]));
    }

    #[test]
    fn equal_as_functions() {
        let a = RatFn2::new(P::from_terms([(c(2), 0, 0), (c(2), 0, 1)]), P::constant(c(2))).unwrap();
        let b = RatFn2::new(P::from_terms([(c(1), 0, 0), (c(1), 0, 1)]), P::one()).unwrap();
        assert!(a.approx_eq(&b, 0.0));
        let fa = RatFn2::new(a.num.map_coeffs(Approx::from_exact), a.den.map_coeffs(Approx::from_exact)).unwrap();
        let fb = RatFn2::new(b.num.map_coeffs(Approx::from_exact), b.den.map_coeffs(Approx::from_exact)).unwrap();
        assert!(fa.approx_eq(&fb, 1e-12));
    }

    #[test]
    fn ratio_normalizes_mu() {
        // mu^-1 (lambda - mu) -> (lambda - mu) / lambda
        let p = P::from_terms([(c(1), 1, -1), (c(-1), 0, 0)]);
        let r = RatFn2::ratio_at_mu_zero(&p).unwrap();
        assert_eq!(r.den, P::lambda());
        assert!(RatFn2::new(P::one(), P::mu()).is_err());
    }
}
