//! The Kasteleyn matrix twisted by the two basis curves.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{LaurentPoly2, PolyMatrix, Scalar, SPIN_ORDER};
use crate::torus::{Color, ToricGraph};

use super::covers::hamiltonians;
use super::marking::Marking;
use super::DimerError;

/// Rows are white vertices and columns black vertices, both in id order.
/// Each edge adds `k(e) wt(e) lambda^cut mu^rim`, crossings taken from white
/// to black.
pub fn kasteleyn_matrix<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>) -> Result<PolyMatrix<S>, DimerError> {
    let whites = g.ids_of_color(Color::White);
    let blacks = g.ids_of_color(Color::Black);
    if whites.len() != blacks.len() {
        return Err(DimerError::ColorCountMismatch { white: whites.len(), black: blacks.len() });
    }
    if m.values.len() != g.edges().len() {
        return Err(DimerError::MarkingLength { found: m.values.len(), edges: g.edges().len() });
    }
    let mut k = PolyMatrix::zeros(whites.len(), blacks.len());
    for (e, mark) in g.edges().iter().zip(&m.values) {
        let (w, b) = match (g.vertex(e.tail).color, g.vertex(e.head).color) {
            (Color::White, Color::Black) => (e.tail, e.head),
            (Color::Black, Color::White) => (e.head, e.tail),
            _ => return Err(DimerError::NotBipartite),
        };
        let (cut, rim) = g.wb_crossings(e);
        let i = whites.binary_search(&w).unwrap();
        let j = blacks.binary_search(&b).unwrap();
        k.accumulate(i, j, &LaurentPoly2::monomial(mark.clone() * &e.weight, cut, rim));
    }
    Ok(k)
}

/// `det` of the Kasteleyn matrix, as computed (no normalization).
pub fn char_poly<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>) -> Result<LaurentPoly2<S>, DimerError> {
    Ok(kasteleyn_matrix(g, m)?.det()?)
}

/// Outcome of comparing the determinant with the enumerated covers.
#[derive(Clone, Debug, Serialize)]
pub struct KasteleynCheck {
    pub ok: bool,
    /// Sign pair applied to `(lambda, mu)` before comparing.
    pub spin: Option<(i8, i8)>,
    /// Sign of each parity class `[i mod 2][j mod 2]` of the shifted class,
    /// with the overall unit removed; `0` where the class was not observed.
    pub pattern: [[i8; 2]; 2],
    pub char_poly: String,
    pub generating_function: String,
    pub message: String,
}

/// Checks that, after some sign flip of the variables and a monomial shift,
/// every coefficient of `K` is `g sigma(i mod 2, j mod 2) H_(i,j)` for one
/// unit `g` and a parity pattern with three positive classes and one
/// negative.
pub fn kasteleyn_check<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>, tol: f64) -> Result<KasteleynCheck, DimerError> {
    let k = char_poly(g, m)?;
    let h = hamiltonians(g).ok_or(DimerError::NoPerfectMatching)?;
    let hp = h.generating_function();
    let mut report = KasteleynCheck {
        ok: false,
        spin: None,
        pattern: [[0; 2]; 2],
        char_poly: k.to_string(),
        generating_function: hp.to_string(),
        message: String::new(),
    };
    if k.is_zero() {
        report.message = "determinant vanishes".into();
        return Ok(report);
    }
    let mut first_failure = None;
    for (e1, e2) in SPIN_ORDER {
        match parity_pattern(&k.substitute_signs(e1, e2), &hp, tol) {
            Ok(pattern) => {
                report.ok = true;
                report.spin = Some((e1, e2));
                report.pattern = pattern;
                report.message = format!("matched with signs ({e1:+}, {e2:+})");
                return Ok(report);
            }
            Err(msg) => {
                first_failure.get_or_insert(msg);
            }
        }
    }
    report.message = first_failure.unwrap_or_default();
    Ok(report)
}

fn parity_pattern<S: Scalar>(k: &LaurentPoly2<S>, h: &LaurentPoly2<S>, tol: f64) -> Result<[[i8; 2]; 2], String> {
    let (a, b) = k.min_exponents();
    let k = k.shift(-a, -b);
    let support = |p: &LaurentPoly2<S>| p.terms().map(|(e, _)| *e).collect::<Vec<_>>();
    if support(&k) != support(h) {
        return Err("supports of K and the Hamiltonian table differ".into());
    }
    let mut unit: Option<S> = None;
    let mut signs: BTreeMap<(usize, usize), i8> = BTreeMap::new();
    for (&(i, j), hv) in h.terms() {
        let r = k.coeff(i, j).div(hv).map_err(|e| e.to_string())?;
        let u = unit.get_or_insert_with(|| r.clone());
        let s = if r.approx_eq(u, tol) {
            1
        } else if r.approx_eq(&-u.clone(), tol) {
            -1
        } else {
            return Err(format!("class ({i}, {j}): coefficient is not a signed multiple of the Hamiltonian"));
        };
        let key = (i.rem_euclid(2) as usize, j.rem_euclid(2) as usize);
        if *signs.entry(key).or_insert(s) != s {
            return Err(format!("class ({i}, {j}): sign differs within its parity class"));
        }
    }
    // overall sign chosen so that at most one class is negative
    let neg = signs.values().filter(|&&s| s < 0).count();
    let pos = signs.len() - neg;
    let flip = if neg <= 1 && (neg == 1 || signs.len() < 4) {
        1
    } else if pos <= 1 && (pos == 1 || signs.len() < 4) {
        -1
    } else {
        return Err(format!("{pos} positive and {neg} negative parity classes"));
    };
    let mut pattern = [[0i8; 2]; 2];
    for ((p, q), s) in signs {
        pattern[p][q] = s * flip;
    }
    Ok(pattern)
}
