#![allow(dead_code)]

use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_dimers::instances::{example1_exact, randomize_weights, square_grid, GridPattern};
use toric_dimers::torus::ToricGraph;
use toric_dimers::{Cyclo8, ExactPoly, LaurentPoly2};

pub fn c(n: i64) -> Cyclo8 {
    Cyclo8::from_int(n)
}

pub fn lp(terms: &[(i64, i64, i64)]) -> ExactPoly {
    LaurentPoly2::from_terms(terms.iter().map(|&(k, i, j)| (c(k), i, j)))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bipartite toric graphs used across the suites, all with weight 1.
pub fn unit_graphs() -> Vec<(&'static str, ToricGraph<Cyclo8>)> {
    let one = |_| c(1);
    vec![
        ("example1", example1_exact([1; 6], false)),
        ("example1_switched", example1_exact([1; 6], true)),
        ("grid2x2", square_grid(2, 2, GridPattern::Parallel, one)),
        ("grid4x2", square_grid(4, 2, GridPattern::Parallel, one)),
        ("grid2x4", square_grid(2, 4, GridPattern::Parallel, one)),
        ("grid4x4_alt", square_grid(4, 4, GridPattern::Alternating, one)),
    ]
}

pub fn random_graphs(seed: u64, max: i64) -> Vec<(&'static str, ToricGraph<Cyclo8>)> {
    let mut r = rng(seed);
    unit_graphs().into_iter().map(|(n, g)| (n, randomize_weights(&g, &mut r, max))).collect()
}

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn cyclo() -> impl Strategy<Value = Cyclo8> {
    proptest::array::uniform4(small_rational()).prop_map(Cyclo8::new)
}

/// Polynomials with small integer coefficients and exponents in `[-1, 2]`.
pub fn poly() -> impl Strategy<Value = ExactPoly> {
    proptest::collection::vec((-5i64..=5, -1i64..=2, -1i64..=2), 0..5).prop_map(|t| lp(&t))
}

/// Genuine polynomials of degree at most 2 in each variable.
pub fn small_poly() -> impl Strategy<Value = ExactPoly> {
    proptest::collection::vec((-4i64..=4, 0i64..=2, 0i64..=2), 0..4).prop_map(|t| lp(&t))
}
