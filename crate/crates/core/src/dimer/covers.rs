//! Dimer covers and the Hamiltonians they define.

use std::collections::BTreeMap;

use crate::algebra::{LaurentPoly2, Scalar};
use crate::torus::{Color, ToricGraph};

/// A perfect matching. The class is the sum, over its edges taken from
/// white to black, of `(cut crossings, rim crossings)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DimerCover<S> {
    pub edges: Vec<u32>,
    pub weight: S,
    pub class: (i64, i64),
}

/// All dimer covers, by backtracking over white vertices in id order with
/// candidate edges in id order.
pub fn enumerate_covers<S: Scalar>(g: &ToricGraph<S>) -> Vec<DimerCover<S>> {
    let whites = g.ids_of_color(Color::White);
    let blacks = g.ids_of_color(Color::Black);
    if whites.len() != blacks.len() {
        return Vec::new();
    }
    // candidate (edge index, black slot) per white vertex
    let slot = |id: u32| blacks.binary_search(&id).ok();
    let cand: Vec<Vec<(usize, usize)>> = whites
        .iter()
        .map(|&w| {
            g.incident(w)
                .into_iter()
                .filter_map(|i| {
                    let e = &g.edges()[i];
                    slot(e.other_end(w)).map(|b| (i, b))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; blacks.len()];
    let mut chosen = Vec::with_capacity(whites.len());
    backtrack(g, &cand, 0, &mut used, &mut chosen, &mut out);
    out
}

fn backtrack<S: Scalar>(
    g: &ToricGraph<S>,
    cand: &[Vec<(usize, usize)>],
    k: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<DimerCover<S>>,
) {
    if k == cand.len() {
        let mut weight = S::one();
        let mut class = (0, 0);
        for &i in chosen.iter() {
            let e = &g.edges()[i];
            weight = weight * &e.weight;
            let c = g.wb_crossings(e);
            class = (class.0 + c.0, class.1 + c.1);
        }
        let mut edges: Vec<u32> = chosen.iter().map(|&i| g.edges()[i].id).collect();
        edges.sort_unstable();
        out.push(DimerCover { edges, weight, class });
        return;
    }
    // prune: every later white vertex needs a free black neighbour
    if cand[k..].iter().any(|c| c.iter().all(|&(_, b)| used[b])) {
        return;
    }
    for &(i, b) in &cand[k] {
        if used[b] {
            continue;
        }
        used[b] = true;
        chosen.push(i);
        backtrack(g, cand, k + 1, used, chosen, out);
        chosen.pop();
        used[b] = false;
    }
}

/// Sums of cover weights per class, classes shifted so both minima are 0.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianTable<S> {
    pub entries: BTreeMap<(i64, i64), S>,
    /// The shift subtracted from the raw classes.
    pub shift: (i64, i64),
}

impl<S: Scalar> HamiltonianTable<S> {
    pub fn from_covers(covers: &[DimerCover<S>]) -> Option<Self> {
        let mi = covers.iter().map(|c| c.class.0).min()?;
        let mj = covers.iter().map(|c| c.class.1).min()?;
        let mut entries: BTreeMap<(i64, i64), S> = BTreeMap::new();
        for c in covers {
            let key = (c.class.0 - mi, c.class.1 - mj);
            let v = entries.remove(&key).unwrap_or_else(S::zero) + &c.weight;
            entries.insert(key, v);
        }
        Some(HamiltonianTable { entries, shift: (mi, mj) })
    }

    /// `sum H_(i,j) lambda^i mu^j`.
    pub fn generating_function(&self) -> LaurentPoly2<S> {
        LaurentPoly2::from_terms(self.entries.iter().map(|(&(i, j), v)| (v.clone(), i, j)))
    }
}

pub fn hamiltonians<S: Scalar>(g: &ToricGraph<S>) -> Option<HamiltonianTable<S>> {
    HamiltonianTable::from_covers(&enumerate_covers(g))
}
