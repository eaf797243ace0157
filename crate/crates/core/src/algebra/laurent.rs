//! Bivariate Laurent polynomials in `lambda`, `mu`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::AlgebraError;

/// Exponent pair `(lambda-degree, mu-degree)`.
pub type Exp = (i64, i64);

/// Finitely supported map from exponent pairs to nonzero coefficients.
///
/// Keys are ordered lexicographically by `(lambda, mu)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly2<S> {
    terms: BTreeMap<Exp, S>,
}

/// Output of [`LaurentPoly2::normalize`]: `p = lambda^a mu^b * leading * canonical`.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalized<S> {
    pub canonical: LaurentPoly2<S>,
    pub shift: Exp,
    pub leading: S,
}

impl<S: Scalar> LaurentPoly2<S> {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: S, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentPoly2 { terms }
    }

    pub fn lambda() -> Self {
        Self::monomial(S::one(), 1, 0)
    }

    pub fn mu() -> Self {
        Self::monomial(S::one(), 0, 1)
    }

    /// Builds a polynomial from `(coefficient, i, j)` triples, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (S, i64, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, i, j) in it {
            p.add_term((i, j), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    /// Lexicographically smallest monomial.
    pub fn min_term(&self) -> Option<(&Exp, &S)> {
        self.terms.iter().next()
    }

    /// Lexicographically largest monomial.
    pub fn max_term(&self) -> Option<(&Exp, &S)> {
        self.terms.iter().next_back()
    }

    pub fn lambda_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.0).min()?;
        let hi = self.terms.keys().map(|e| e.0).max()?;
        Some((lo, hi))
    }

    pub fn mu_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.1).min()?;
        let hi = self.terms.keys().map(|e| e.1).max()?;
        Some((lo, hi))
    }

    /// Componentwise minimum exponent, `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> Exp {
        match (self.lambda_range(), self.mu_range()) {
            (Some(a), Some(b)) => (a.0, b.0),
            _ => (0, 0),
        }
    }

    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_mu_free(&self) -> bool {
        self.terms.keys().all(|e| e.1 == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.0 >= 0 && e.1 >= 0)
    }

    fn add_term(&mut self, e: Exp, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let scale = float_mag(v).max(float_mag(&c));
                let s = v.clone() + c;
                if s.is_zero() || s.is_negligible(scale) {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (*e, v.clone() * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        LaurentPoly2 { terms }
    }

    /// Multiply by `lambda^a mu^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        let terms = self.terms.iter().map(|(e, v)| ((e.0 + a, e.1 + b), v.clone())).collect();
        LaurentPoly2 { terms }
    }

    /// `p(e1 * lambda, e2 * mu)` for signs `e1, e2`.
    pub fn substitute_signs(&self, e1: i8, e2: i8) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let flip = (e1 < 0 && e.0.rem_euclid(2) == 1) ^ (e2 < 0 && e.1.rem_euclid(2) == 1);
                (*e, if flip { -v.clone() } else { v.clone() })
            })
            .collect();
        LaurentPoly2 { terms }
    }

    /// `p(1/lambda, 1/mu)`.
    pub fn invert_variables(&self) -> Self {
        let terms = self.terms.iter().map(|(e, v)| ((-e.0, -e.1), v.clone())).collect();
        LaurentPoly2 { terms }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly2<T> {
        LaurentPoly2::from_terms(self.terms.iter().map(|(e, v)| (f(v), e.0, e.1)))
    }

    pub fn evaluate(&self, lambda: &S, mu: &S) -> Result<S, AlgebraError> {
        let mut acc = S::zero();
        for ((i, j), c) in &self.terms {
            acc = acc + c.clone() * pow(lambda, *i)? * pow(mu, *j)?;
        }
        Ok(acc)
    }

    /// Substitute a value for `mu` only; the result is `mu`-free.
    pub fn evaluate_mu(&self, mu: &S) -> Result<Self, AlgebraError> {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term((*i, 0), c.clone() * pow(mu, *j)?);
        }
        Ok(out)
    }

    /// The part of `p` of `mu`-degree `j`, as a `mu`-free polynomial.
    pub fn mu_coefficient(&self, j: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.1 == j)
            .map(|(e, v)| ((e.0, 0), v.clone()))
            .collect();
        LaurentPoly2 { terms }
    }

    /// All nonzero `mu`-coefficients, ascending in `mu`-degree.
    pub fn mu_coefficients(&self) -> Vec<(i64, Self)> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            out.entry(*j).or_insert_with(Self::zero).terms.insert((*i, 0), c.clone());
        }
        out.into_iter().collect()
    }

    /// Multiply by a power of `mu` so the minimal `mu`-degree is zero.
    pub fn normalize_mu(&self) -> Self {
        match self.mu_range() {
            Some((lo, _)) => self.shift(0, -lo),
            None => self.clone(),
        }
    }

    /// Canonical form: minimal degrees `(0, 0)` and unit coefficient on the
    /// lexicographically smallest monomial.
    pub fn normalize(&self) -> Result<Normalized<S>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let (a, b) = self.min_exponents();
        let shifted = self.shift(-a, -b);
        let leading = shifted.min_term().unwrap().1.clone();
        let canonical = shifted.scale(&leading.inv()?);
        Ok(Normalized { canonical, shift: (a, b), leading })
    }

    pub fn canonical(&self) -> Result<Self, AlgebraError> {
        Ok(self.normalize()?.canonical)
    }

    /// Coefficient-wise comparison within `tol`, relative to the larger of the
    /// two maximal coefficient magnitudes. Exact equality for the exact backend.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if S::BACKEND == super::Backend::Exact {
            return self == other;
        }
        let scale = self.max_magnitude().max(other.max_magnitude());
        if scale == 0.0 {
            return true;
        }
        let keys: std::collections::BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|&(i, j)| {
            let d = self.coeff(i, j) - other.coeff(i, j);
            d.magnitude() <= tol * scale
        })
    }

    /// Exact division in the Laurent ring, failing with `InexactDivision`
    /// when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a0, b0) = self.min_exponents();
        let (a1, b1) = d.min_exponents();
        let num = self.shift(-a0, -b0);
        let den = d.shift(-a1, -b1);
        let q = poly_div(&num, &den)?;
        Ok(q.shift(a0 - a1, b0 - b1))
    }

    /// Drops terms that are negligible relative to the largest coefficient.
    pub fn pruned(&self, tol: f64) -> Self {
        let scale = self.max_magnitude();
        let terms = self
            .terms
            .iter()
            .filter(|(_, v)| !(S::BACKEND == super::Backend::Float && v.magnitude() <= tol * scale))
            .map(|(e, v)| (*e, v.clone()))
            .collect();
        LaurentPoly2 { terms }
    }
}

/// Magnitude for the floating backend; the exact backend never needs it.
fn float_mag<S: Scalar>(x: &S) -> f64 {
    if S::BACKEND == super::Backend::Float {
        x.magnitude()
    } else {
        0.0
    }
}

fn pow<S: Scalar>(x: &S, k: i64) -> Result<S, AlgebraError> {
    let base = if k < 0 { x.inv()? } else { x.clone() };
    let mut acc = S::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * &base;
    }
    Ok(acc)
}

/// Division of genuine polynomials (nonnegative exponents) by leading-term
/// reduction in lexicographic order.
fn poly_div<S: Scalar>(num: &LaurentPoly2<S>, den: &LaurentPoly2<S>) -> Result<LaurentPoly2<S>, AlgebraError> {
    let (&(di, dj), dc) = den.max_term().expect("nonzero divisor");
    let dc_inv = dc.inv()?;
    let mut r = num.clone();
    let mut q = LaurentPoly2::zero();
    // each step removes the current leading monomial, so the number of steps
    // is bounded by the size of the exponent box of `num`
    let (ni, nj) = (
        num.lambda_range().map_or(0, |r| r.1 + 1),
        num.mu_range().map_or(0, |r| r.1 + 1),
    );
    let mut budget = (ni.max(1) * nj.max(1)) as usize + 1;
    // rounding residue tolerated by the floating backend
    let residue = 1e-9 * num.max_magnitude().max(1.0);
    while let Some((&(ri, rj), rc)) = r.max_term() {
        let (qi, qj) = (ri - di, rj - dj);
        if S::BACKEND == super::Backend::Float && rc.magnitude() <= residue {
            r.terms.remove(&(ri, rj));
            continue;
        }
        if budget == 0 || qi < 0 || qj < 0 {
            return Err(AlgebraError::InexactDivision);
        }
        budget -= 1;
        let t = rc.clone() * &dc_inv;
        let sub = den.scale(&t).shift(qi, qj);
        r = &r - &sub;
        r.terms.remove(&(ri, rj));
        q.add_term((qi, qj), t);
    }
    Ok(q)
}

impl<'a, S: Scalar> Add<&'a LaurentPoly2<S>> for &'a LaurentPoly2<S> {
    type Output = LaurentPoly2<S>;
    fn add(self, o: &LaurentPoly2<S>) -> LaurentPoly2<S> {
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.add_term(*e, v.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a LaurentPoly2<S>> for &'a LaurentPoly2<S> {
    type Output = LaurentPoly2<S>;
    fn sub(self, o: &LaurentPoly2<S>) -> LaurentPoly2<S> {
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.add_term(*e, -v.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a LaurentPoly2<S>> for &'a LaurentPoly2<S> {
    type Output = LaurentPoly2<S>;
    fn mul(self, o: &LaurentPoly2<S>) -> LaurentPoly2<S> {
        let mut acc: BTreeMap<Exp, (S, f64)> = BTreeMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                let p = a.clone() * b;
                let m = float_mag(&p);
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                match acc.get_mut(&e) {
                    Some((v, s)) => {
                        *v = v.clone() + p;
                        *s = s.max(m);
                    }
                    None => {
                        acc.insert(e, (p, m));
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, (v, s))| !v.is_zero() && !v.is_negligible(*s))
            .map(|(e, (v, _))| (e, v))
            .collect();
        LaurentPoly2 { terms }
    }
}

impl<S: Scalar> Neg for LaurentPoly2<S> {
    type Output = LaurentPoly2<S>;
    fn neg(self) -> LaurentPoly2<S> {
        LaurentPoly2 { terms: self.terms.into_iter().map(|(e, v)| (e, -v)).collect() }
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Scalar> $tr for LaurentPoly2<S> {
            type Output = LaurentPoly2<S>;
            fn $m(self, o: LaurentPoly2<S>) -> LaurentPoly2<S> { (&self).$m(&o) }
        }
    )*};
}
owned_poly_ops!(Add add, Sub sub, Mul mul);

impl<S: Scalar> Zero for LaurentPoly2<S> {
    fn zero() -> Self {
        LaurentPoly2::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for LaurentPoly2<S> {
    fn one() -> Self {
        LaurentPoly2::one()
    }
}

/// Bit-exact text rendering: terms ascending by `(mu-degree, lambda-degree)`.
impl<S: Scalar> fmt::Display for LaurentPoly2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Exp> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.1, e.0));
        for (n, e) in keys.into_iter().enumerate() {
            let ct = self.terms[e].render();
            let mut factors: Vec<String> = Vec::new();
            let mono = monomial_text(*e);
            match (&ct.body, mono.is_empty()) {
                (None, true) => factors.push("1".into()),
                (None, false) => {}
                (Some(b), true) => factors.push(b.clone()),
                (Some(b), false) if ct.compound => factors.push(format!("({b})")),
                (Some(b), false) => factors.push(b.clone()),
            }
            factors.extend(mono);
            let body = factors.join("*");
            match (n, ct.negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

fn monomial_text((i, j): Exp) -> Vec<String> {
    let mut out = Vec::new();
    for (name, k) in [("lambda", i), ("mu", j)] {
        match k {
            0 => {}
            1 => out.push(name.to_string()),
            k => out.push(format!("{name}^{k}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Approx, Cyclo8};

    type P = LaurentPoly2<Cyclo8>;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    fn p(terms: &[(i64, i64, i64)]) -> P {
        P::from_terms(terms.iter().map(|&(v, i, j)| (c(v), i, j)))
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 0, 0), (1, 1, 1)]);
        let b = p(&[(1, 0, 0), (-1, 1, 1)]);
        assert_eq!(&a * &b, p(&[(1, 0, 0), (-1, 2, 2)]));
    }

    #[test]
    fn sign_substitution() {
        let a = p(&[(1, 0, 0), (-2, 1, 0), (1, 0, 1)]);
        assert_eq!(a.substitute_signs(-1, 1), p(&[(1, 0, 0), (2, 1, 0), (1, 0, 1)]));
        assert_eq!(a.substitute_signs(-1, -1).substitute_signs(-1, -1), a);
    }

    #[test]
    fn evaluation() {
        let a = p(&[(1, 0, 0), (-2, 0, 1), (1, 0, 2)]);
        assert_eq!(a.evaluate(&c(5), &c(1)).unwrap(), c(0));
        let inv = p(&[(1, -1, 0)]);
        assert_eq!(inv.evaluate(&c(0), &c(1)), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn normalize_examples() {
        let n = p(&[(3, 2, 1), (-3, 3, 2)]).normalize().unwrap();
        assert_eq!(n.canonical, p(&[(1, 0, 0), (-1, 1, 1)]));
        assert_eq!(n.shift, (2, 1));
        assert_eq!(n.leading, c(3));

        let n = P::one().normalize().unwrap();
        assert_eq!((n.canonical, n.shift, n.leading), (P::one(), (0, 0), c(1)));

        let q = p(&[(-2, 0, -1), (2, 0, 0)]);
        let n = q.normalize().unwrap();
        assert_eq!(n.canonical, p(&[(1, 0, 0), (-1, 0, 1)]));
        assert_eq!(n.shift, (0, -1));
        assert_eq!(n.leading, c(-2));
        // re-expanding the product recovers the input
        assert_eq!(n.canonical.shift(n.shift.0, n.shift.1).scale(&n.leading), q);

        assert_eq!(P::zero().normalize(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(1, 0, 0), (-1, 1, 0)]);
        let b = p(&[(1, 0, 0), (1, 0, 1), (3, 2, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.shift(-3, 2).exact_div(&b).unwrap(), a.shift(-3, 2));
        let r = &prod + &P::one();
        assert_eq!(r.exact_div(&a), Err(AlgebraError::InexactDivision));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(1, 0, 0), (-2, 0, 1), (1, 0, 2)]).to_string(), "1 - 2*mu + mu^2");
        let half_z = Cyclo8::parse("1/2*z").unwrap();
        assert_eq!(P::monomial(half_z, 1, -1).to_string(), "(1/2)*z*lambda*mu^-1");
        assert_eq!(p(&[(-1, 0, 0), (3, 1, 0), (-1, 0, 1)]).to_string(), "-1 + 3*lambda - mu");
        let mixed = Cyclo8::parse("1+z^2").unwrap();
        assert_eq!(P::monomial(mixed, 0, 1).to_string(), "(1 + z^2)*mu");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::constant(Cyclo8::parse("-1/2").unwrap()).to_string(), "-1/2");
    }

    #[test]
    fn float_cancellation_prunes() {
        let a = LaurentPoly2::from_terms([(Approx::real(0.1), 0, 0), (Approx::real(0.2), 1, 0)]);
        let b = LaurentPoly2::from_terms([(Approx::real(0.3), 0, 0)]);
        let s = &(&a + &a) + &a;
        let d = &s - &b;
        assert_eq!(d.len(), 1);
        assert!(d.approx_eq(&LaurentPoly2::monomial(Approx::real(0.6), 1, 0), 1e-12));
    }
}
