mod common;

use std::collections::BTreeSet;

use common::*;
use toric_dimers::dimer::{
    alternating_product, char_poly, enumerate_covers, find_kasteleyn_marking, hamiltonians, kasteleyn_check, spin_variants,
};
use toric_dimers::torus::{compute_faces, Color, ToricGraph};
use toric_dimers::Cyclo8;

fn kasteleyn_poly(g: &ToricGraph<Cyclo8>) -> toric_dimers::ExactPoly {
    let m = find_kasteleyn_marking(g, &compute_faces(g).unwrap()).unwrap();
    char_poly(g, &m).unwrap()
}

#[test]
fn covers_are_perfect_matchings() {
    for (name, g) in unit_graphs() {
        let covers = enumerate_covers(&g);
        assert!(!covers.is_empty(), "{name}");
        for cv in &covers {
            let mut hit = BTreeSet::new();
            for id in &cv.edges {
                let e = g.edge(*id);
                assert!(hit.insert(e.tail) && hit.insert(e.head), "{name}: vertex used twice");
            }
            assert_eq!(hit.len(), g.vertices().len());
        }
        let distinct: BTreeSet<_> = covers.iter().map(|c| c.edges.clone()).collect();
        assert_eq!(distinct.len(), covers.len());
    }
}

/// `(cut, rim)` crossings of an edge read from white to black.
fn wb(g: &ToricGraph<Cyclo8>, id: u32) -> (i64, i64) {
    let e = g.edge(id);
    if g.vertex(e.tail).color == Color::White {
        (e.cross_cut, e.cross_rim)
    } else {
        (-e.cross_cut, -e.cross_rim)
    }
}

#[test]
fn class_differences_are_cycle_classes() {
    for (name, g) in unit_graphs() {
        let covers = enumerate_covers(&g);
        for a in &covers {
            for b in &covers {
                let (sa, sb): (BTreeSet<u32>, BTreeSet<u32>) = (a.edges.iter().copied().collect(), b.edges.iter().copied().collect());
                let mut d = (0, 0);
                for id in sa.difference(&sb) {
                    let x = wb(&g, *id);
                    d = (d.0 + x.0, d.1 + x.1);
                }
                for id in sb.difference(&sa) {
                    let x = wb(&g, *id);
                    d = (d.0 - x.0, d.1 - x.1);
                }
                assert_eq!((a.class.0 - b.class.0, a.class.1 - b.class.1), d, "{name}");
            }
        }
    }
}

#[test]
fn marking_satisfies_face_condition() {
    for (name, g) in unit_graphs() {
        let faces = compute_faces(&g).unwrap();
        let m = find_kasteleyn_marking(&g, &faces).unwrap();
        for f in &faces {
            let sign = if (f.len() / 2) % 2 == 0 { -1 } else { 1 };
            assert_eq!(alternating_product(&g, &f.walk, &m).unwrap(), c(sign), "{name}");
        }
    }
}

#[test]
fn gauge_invariance_of_char_poly() {
    let mut r = rng(21);
    for (name, g) in random_graphs(20, 9) {
        let k = kasteleyn_poly(&g).canonical().unwrap();
        for v in g.vertices() {
            let t = toric_dimers::instances::random_positive(&mut r, 7);
            let h = g.gauge_transform(v.id, &t).unwrap();
            assert_eq!(kasteleyn_poly(&h).canonical().unwrap(), k, "{name} at {}", v.id);
        }
    }
}

#[test]
fn coefficients_match_cover_counts_in_absolute_value() {
    for seed in 0..3 {
        for (name, g) in random_graphs(30 + seed, 12) {
            let k = kasteleyn_poly(&g);
            let (a, b) = k.min_exponents();
            let k = k.shift(-a, -b);
            let h = hamiltonians(&g).unwrap().generating_function();
            let support = |p: &toric_dimers::ExactPoly| p.terms().map(|(e, _)| *e).collect::<BTreeSet<_>>();
            assert_eq!(support(&k), support(&h), "{name}");
            // one global unit relates the two up to sign
            let (e0, h0) = h.min_term().unwrap();
            let g0 = k.coeff(e0.0, e0.1) * &h0.inv().unwrap();
            for (e, hv) in h.terms() {
                let kv = k.coeff(e.0, e.1);
                assert_eq!(kv.norm(), (g0.clone() * hv).norm(), "{name} at {e:?}");
            }
            assert!(kasteleyn_check(&g, &find_kasteleyn_marking(&g, &compute_faces(&g).unwrap()).unwrap(), 0.0).unwrap().ok);
        }
    }
}

#[test]
fn spin_variants_are_sign_substitutions() {
    for (name, g) in random_graphs(40, 9) {
        let m = find_kasteleyn_marking(&g, &compute_faces(&g).unwrap()).unwrap();
        let k = char_poly(&g, &m).unwrap();
        let got: BTreeSet<String> =
            spin_variants(&g, &m).iter().map(|v| char_poly(&g, v).unwrap().canonical().unwrap().to_string()).collect();
        let want: BTreeSet<String> = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .iter()
            .map(|&(a, b)| k.substitute_signs(a, b).canonical().unwrap().to_string())
            .collect();
        assert_eq!(got, want, "{name}");
    }
}
