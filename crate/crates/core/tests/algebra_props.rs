mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use toric_dimers::algebra::{gcd_for_lambda_divisor, lp_equal_up_to_spin, Scalar, SPIN_ORDER};
use toric_dimers::{Cyclo8, ExactPoly, LaurentPoly2, PolyMatrix};

fn laplace(m: &[Vec<ExactPoly>]) -> ExactPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly2::one();
    }
    let mut acc = LaurentPoly2::zero();
    for j in 0..n {
        let minor: Vec<Vec<ExactPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect()).collect();
        let t = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<ExactPoly>>> {
    proptest::collection::vec(proptest::collection::vec(small_poly(), n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &Scalar::inv(&a).unwrap(), Cyclo8::one());
        }
        let p = (a.clone() * &b).to_complex();
        let q = a.to_complex() * b.to_complex();
        prop_assert!((p - q).norm() <= 1e-9 * (1.0 + q.norm()));
    }
}

proptest! {
    #[test]
    fn bareiss_matches_laplace(m in (1usize..=4).prop_flat_map(square)) {
        let pm = PolyMatrix::from_rows(m.clone());
        prop_assert_eq!(pm.det().unwrap(), laplace(&m));
    }

    #[test]
    fn normalize_is_idempotent(p in poly()) {
        prop_assume!(!p.is_zero());
        let c = p.canonical().unwrap();
        let again = c.normalize().unwrap();
        prop_assert_eq!(again.shift, (0, 0));
        prop_assert_eq!(again.leading, Cyclo8::one());
        prop_assert_eq!(again.canonical, c);
    }

    #[test]
    fn spin_substitution_is_detected(p in poly(), k in 0usize..4) {
        prop_assume!(!p.is_zero());
        let (e1, e2) = SPIN_ORDER[k];
        prop_assert!(lp_equal_up_to_spin(&p.substitute_signs(e1, e2), &p, 0.0).unwrap().is_some());
    }

    #[test]
    fn lambda_divisor_divides(f in small_poly(), g in small_poly()) {
        let f = f.evaluate_mu(&Cyclo8::one()).unwrap();
        let k = &f * &g;
        prop_assume!(!k.is_zero());
        let q = gcd_for_lambda_divisor(&k).unwrap();
        let k = k.normalize_mu();
        prop_assert!(k.exact_div(&q).is_ok());
        let k0 = k.mu_coefficient(0);
        prop_assert!(k0.exact_div(&q).is_ok());
        // every lambda-factor of K divides Q
        prop_assert!(q.exact_div(&f.canonical().unwrap()).is_ok());
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pivot_identity(rows in 1usize..=4, cols in 1usize..=6, seed in any::<u64>()) {
        let mut r = rng(seed);
        use rand::Rng;
        let mut entry = || lp(&[(r.gen_range(-3..=3), r.gen_range(-1..=1), r.gen_range(0..=1)), (r.gen_range(-3..=3), 0, 0)]);
        let p = PolyMatrix::from_fn(rows, cols, |_, _| entry());
        let q = PolyMatrix::from_fn(cols, rows, |_, _| entry());
        let lhs = PolyMatrix::identity(rows).add(&p.mul(&q)).det().unwrap();
        let rhs = PolyMatrix::identity(cols).add(&q.mul(&p)).det().unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
