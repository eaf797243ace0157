//! Polynomials in `lambda` alone; used for gcd computations.

use super::laurent::LaurentPoly2;
use super::scalar::Scalar;
use super::AlgebraError;

/// Dense coefficient vector, index = degree, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Reads a `mu`-free polynomial. Negative `lambda` powers are rejected.
    pub fn from_laurent(p: &LaurentPoly2<S>) -> Result<Self, AlgebraError> {
        if !p.is_mu_free() || !p.is_polynomial() {
            return Err(AlgebraError::NotUnivariate);
        }
        let top = p.lambda_range().map_or(0, |r| r.1 + 1) as usize;
        let mut coeffs = vec![S::zero(); top];
        for (&(i, _), c) in p.terms() {
            coeffs[i as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_laurent(&self) -> LaurentPoly2<S> {
        LaurentPoly2::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| (c.clone(), i as i64, 0)))
    }

    pub fn monic(&self) -> Result<Self, AlgebraError> {
        let lead = self.coeffs.last().ok_or(AlgebraError::ZeroPolynomial)?.inv()?;
        Ok(UniPoly { coeffs: self.coeffs.iter().map(|c| c.clone() * &lead).collect() })
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dl = d.coeffs.last().ok_or(AlgebraError::DivisionByZero)?.inv()?;
        let dn = d.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![S::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let t = r[k + dn - 1].clone() * &dl;
            if t.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - t.clone() * dc;
            }
            q[k] = t;
        }
        r.truncate(dn - 1);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Monic greatest common divisor. Only meaningful for exact coefficients.
    pub fn gcd(&self, o: &Self) -> Result<Self, AlgebraError> {
        if S::BACKEND == super::Backend::Float {
            return Err(AlgebraError::FloatBackendUnsupported);
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        a.monic()
    }
}
