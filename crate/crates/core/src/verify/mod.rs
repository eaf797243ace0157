//! End-to-end comparison of the boundary measurement side with the dimer
//! side, and of the two integrable systems.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{gcd_for_lambda_divisor, AlgebraError, Backend, LaurentPoly2, RatFn2, Scalar, SPIN_ORDER};
use crate::dimer::{char_poly, hamiltonians, DimerError};
use crate::measurement::paths::reduce;
use crate::measurement::{charpoly_boundary, cut_to_cylinder, turn_weighted, MeasurementError, Method};
use crate::network::{
    bipartite_double, fractional_marking, preprocessing_report, psi_map, validate_network, validate_rim_cut, verify_marking,
    NetworkError, PerfectNetwork,
};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("input is not admissible: {}", .0.join("; "))]
    Precondition(Vec<String>),
    #[error(transparent)]
    Measurement(#[from] MeasurementError),
    #[error(transparent)]
    Dimer(#[from] DimerError),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    TheoremHolds,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct VerifyOptions {
    pub gstv_signs: bool,
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<S> {
    /// `det(I - mu M(lambda))`.
    pub lhs: RatFn2<S>,
    /// The same polynomial computed from `det(I - mu M)` directly.
    pub lhs_direct: RatFn2<S>,
    /// `K(lambda, mu)` on the pushed-forward weights.
    pub rhs_raw: LaurentPoly2<S>,
    /// `K / K(lambda, 0)` after the matched sign flip, or unflipped.
    pub rhs: RatFn2<S>,
    pub spin: Option<(i8, i8)>,
    /// Common `lambda`-factor of all `mu`-coefficients of `K`.
    pub q: Option<LaurentPoly2<S>>,
    pub verdict: Verdict,
    pub systems_coincide: Option<bool>,
    pub doubled: bool,
    pub marking_ok: bool,
    pub preprocessing: Vec<String>,
    pub mismatch: Option<String>,
    pub elapsed_ms: f64,
}

impl<S: Scalar> VerificationReport<S> {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::TheoremHolds
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "schema": SCHEMA,
            "verdict": self.verdict,
            "lhs": ratfn_json(&self.lhs),
            "lhs_direct": ratfn_json(&self.lhs_direct),
            "rhs_raw": self.rhs_raw.to_string(),
            "rhs": ratfn_json(&self.rhs),
            "spin": self.spin.map(|(a, b)| [a, b]),
            "q": self.q.as_ref().map(|q| q.to_string()),
            "systems_coincide": self.systems_coincide,
            "diagnostics": {
                "bipartite_doubling": self.doubled,
                "marking_ok": self.marking_ok,
                "preprocessing": self.preprocessing,
                "mismatch": self.mismatch,
                "elapsed_ms": self.elapsed_ms,
            },
        })
    }
}

pub fn ratfn_json<S: Scalar>(r: &RatFn2<S>) -> Value {
    serde_json::json!({ "num": r.num.to_string(), "den": r.den.to_string() })
}

/// Admissibility checks shared by the measurement side: graph, perfectness
/// and rim/cut conditions.
pub fn admissibility<S: Scalar>(n: &PerfectNetwork<S>) -> Vec<String> {
    let (mut r, _) = validate_network(n);
    r.merge(validate_rim_cut(n));
    r.violations.iter().map(|v| v.to_string()).collect()
}

/// First coefficient where `a * b.den` and `b * a.den` differ.
fn first_difference<S: Scalar>(a: &RatFn2<S>, b: &RatFn2<S>, tol: f64) -> Option<String> {
    let l = &a.num * &b.den;
    let r = &b.num * &a.den;
    let d = &l - &r;
    let scale = l.max_magnitude().max(r.max_magnitude());
    let mut terms: Vec<_> = d.terms().filter(|(_, c)| S::BACKEND == Backend::Exact || c.magnitude() > tol * scale).collect();
    terms.sort_by_key(|((i, j), _)| (*j, *i));
    terms.first().map(|((i, j), _)| format!("coefficient of lambda^{i} mu^{j}: {} vs {}", l.coeff(*i, *j).to_literal(), r.coeff(*i, *j).to_literal()))
}

/// Both sides of the identity, with the sign flip of the dimer side
/// searched among all four.
pub fn verify_theorem1<S: Scalar>(n: &PerfectNetwork<S>, opts: &VerifyOptions) -> Result<VerificationReport<S>, VerifyError> {
    let start = Instant::now();
    let problems = admissibility(n);
    if !problems.is_empty() {
        return Err(VerifyError::Precondition(problems));
    }
    let doubled = !n.graph.is_bipartite();
    let n = if doubled { bipartite_double(n)?.network } else { n.clone() };
    let preprocessing = preprocessing_report(&n).violations.iter().map(|v| v.to_string()).collect();

    let cyl = cut_to_cylinder(&turn_weighted(&n)?)?;
    let flip = |r: RatFn2<S>| if opts.gstv_signs { r.substitute_signs(-1, 1) } else { r };
    let lhs = flip(charpoly_boundary(&cyl, Method::Ratio)?);
    let lhs_direct = flip(charpoly_boundary(&cyl, Method::Direct)?);
    if !lhs.approx_eq(&lhs_direct, opts.tol) {
        return Err(MeasurementError::MethodMismatch(format!("ratio {lhs} vs direct {lhs_direct}")).into());
    }

    let faces = crate::torus::compute_faces(&n.graph).map_err(DimerError::from)?;
    let marking = fractional_marking(&n)?;
    let marking_ok = verify_marking(&n, &faces, &marking, opts.tol)?.ok();
    let psi = psi_map(&n)?;
    let k = char_poly(&psi, &marking)?;
    if k.is_zero() {
        return Err(DimerError::NoPerfectMatching.into());
    }
    let k = k.normalize_mu();
    let side = |e1: i8, e2: i8| -> Result<RatFn2<S>, VerifyError> {
        let ks = k.substitute_signs(e1, e2);
        Ok(reduce(RatFn2::ratio_at_mu_zero(&ks)?)?)
    };
    let mut spin = None;
    let mut rhs = side(1, 1)?;
    for (e1, e2) in SPIN_ORDER {
        let r = side(e1, e2)?;
        if r.approx_eq(&lhs, opts.tol) {
            spin = Some((e1, e2));
            rhs = r;
            break;
        }
    }
    let q = if S::BACKEND == Backend::Exact { Some(gcd_for_lambda_divisor(&k)?) } else { None };
    let systems_coincide = q.as_ref().map(|q| q.lambda_range() == Some((0, 0)));
    let verdict = if spin.is_some() { Verdict::TheoremHolds } else { Verdict::Mismatch };
    let mismatch = if spin.is_none() { first_difference(&lhs, &rhs, opts.tol) } else { None };
    Ok(VerificationReport {
        lhs,
        lhs_direct,
        rhs_raw: k,
        rhs,
        spin,
        q,
        verdict,
        systems_coincide,
        doubled,
        marking_ok,
        preprocessing,
        mismatch,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Coefficients of the two systems read off from `K`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SystemsReport {
    pub schema: u32,
    pub k: String,
    pub q: String,
    /// `mu`-coefficients of `K` (after clearing the lowest power of `mu`).
    pub gk: Vec<(i64, String)>,
    /// `mu`-coefficients of `K / Q`.
    pub gstv: Vec<(i64, String)>,
    pub coincide: bool,
    /// `K / Q` has a single `mu`-degree: no nontrivial Hamiltonians.
    pub gstv_trivial: bool,
    /// Dimer cover counts by homology class.
    pub hamiltonians: Vec<((i64, i64), String)>,
}

pub fn systems_from_char_poly<S: Scalar>(k: &LaurentPoly2<S>) -> Result<SystemsReport, VerifyError> {
    if S::BACKEND != Backend::Exact {
        return Err(AlgebraError::FloatBackendUnsupported.into());
    }
    let k = k.normalize_mu();
    let (a, _) = k.min_exponents();
    let k = k.shift(-a, 0);
    let q = gcd_for_lambda_divisor(&k)?;
    let reduced = k.exact_div(&q)?;
    let coeffs = |p: &LaurentPoly2<S>| p.mu_coefficients().into_iter().map(|(j, c)| (j, c.to_string())).collect::<Vec<_>>();
    let gstv = coeffs(&reduced);
    Ok(SystemsReport {
        schema: SCHEMA,
        k: k.canonical()?.to_string(),
        q: q.to_string(),
        gk: coeffs(&k),
        gstv_trivial: gstv.len() <= 1,
        gstv,
        coincide: q.lambda_range() == Some((0, 0)),
        hamiltonians: Vec::new(),
    })
}

/// Runs the verification, then compares the systems defined by `K` and
/// `K / Q`.
pub fn compare_systems<S: Scalar>(n: &PerfectNetwork<S>, opts: &VerifyOptions) -> Result<(VerificationReport<S>, SystemsReport), VerifyError> {
    if S::BACKEND != Backend::Exact {
        return Err(AlgebraError::FloatBackendUnsupported.into());
    }
    let v = verify_theorem1(n, opts)?;
    let mut s = systems_from_char_poly(&v.rhs_raw)?;
    let g = if v.doubled { bipartite_double(n)?.network.graph } else { n.graph.clone() };
    if let Some(t) = hamiltonians(&psi_map(&PerfectNetwork::new(g))?) {
        s.hamiltonians = t.entries.iter().map(|(c, v)| (*c, v.to_literal().to_string())).collect();
    }
    Ok((v, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::instances::example1_exact;

    fn opts() -> VerifyOptions {
        VerifyOptions { gstv_signs: false, tol: 0.0 }
    }

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly2<Cyclo8> {
        LaurentPoly2::from_terms(terms.iter().map(|&(k, i, j)| (Cyclo8::from_int(k), i, j)))
    }

    #[test]
    fn example1_holds() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], false));
        let r = verify_theorem1(&n, &opts()).unwrap();
        assert!(r.holds(), "{:?}", r.mismatch);
        assert_eq!(r.lhs.num, &lp(&[(1, 0, 0), (-55, 0, 1)]) * &lp(&[(1, 0, 0), (-91, 0, 1)]));
        assert_eq!(r.systems_coincide, Some(true));
        assert!(r.marking_ok);
        assert!(!r.doubled);
        assert!(!r.preprocessing.is_empty());
        assert_eq!(r.to_json()["schema"], 1);
    }

    #[test]
    fn example1_all_ones() {
        let n = PerfectNetwork::new(example1_exact([1; 6], false));
        let r = verify_theorem1(&n, &opts()).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs.num, &lp(&[(1, 0, 0), (-1, 0, 1)]) * &lp(&[(1, 0, 0), (-1, 0, 1)]));
    }

    #[test]
    fn switched_is_trivial() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], true));
        let (r, s) = compare_systems(&n, &opts()).unwrap();
        assert!(r.holds());
        assert_eq!((r.lhs.num.clone(), r.rhs.num.clone()), (LaurentPoly2::one(), LaurentPoly2::one()));
        assert!(s.gstv_trivial);
        assert!(!s.coincide);
    }

    #[test]
    fn factored_polynomial() {
        let k = &lp(&[(1, 0, 0), (-1, 1, 0)]) * &lp(&[(1, 0, 0), (-1, 0, 1)]);
        let s = systems_from_char_poly(&k).unwrap();
        assert_eq!(s.q, lp(&[(-1, 0, 0), (1, 1, 0)]).to_string());
        assert!(!s.coincide);
        assert!(s.gstv.len() == 2);
        let s = systems_from_char_poly(&lp(&[(77, 0, 0), (-178, 0, 1), (65, 0, 2)])).unwrap();
        assert!(s.coincide && !s.gstv_trivial);
    }
}
