mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use toric_dimers::algebra::Scalar;
use toric_dimers::dimer::{fundamental_cycles, walk_class};
use toric_dimers::instances::{perturb, square_grid, GridPattern};
use toric_dimers::torus::geometry::Point;
use toric_dimers::torus::{compute_faces, validate_graph, ToricGraph};
use toric_dimers::Cyclo8;

fn graphs_with_perturbations(seed: u64) -> Vec<ToricGraph<Cyclo8>> {
    let mut r = rng(seed);
    let mut out: Vec<_> = unit_graphs().into_iter().map(|(_, g)| g).collect();
    let grid = square_grid(4, 4, GridPattern::Alternating, |_| c(1));
    for _ in 0..3 {
        out.push(perturb(&grid, &mut r, 1000, 10));
    }
    out
}

#[test]
fn faces_are_null_homologous() {
    for g in graphs_with_perturbations(1) {
        let faces = compute_faces(&g).unwrap();
        for f in &faces {
            assert_eq!(f.crossing_sum(&g), (0, 0));
            assert_eq!(f.lift_sum(&g), Point::zero());
        }
        assert!(validate_graph(&g).0.is_ok());
    }
}

#[test]
fn half_edges_partitioned_by_faces() {
    for g in graphs_with_perturbations(2) {
        let faces = compute_faces(&g).unwrap();
        let mut seen = HashSet::new();
        for f in &faces {
            for h in &f.walk {
                assert!(seen.insert(*h), "half-edge {h:?} on two faces");
            }
        }
        assert_eq!(seen.len(), 2 * g.edges().len());
        let total: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edges().len());
        assert_eq!(g.vertices().len() + faces.len(), g.edges().len());
    }
}

#[test]
fn cycle_class_ignores_faces() {
    for g in graphs_with_perturbations(3) {
        let faces = compute_faces(&g).unwrap();
        for cyc in fundamental_cycles(&g) {
            let base = walk_class(&g, &cyc);
            for f in &faces {
                let mut w = cyc.clone();
                w.extend(f.walk.iter().copied());
                assert_eq!(walk_class(&g, &w), base);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauge_keeps_geometry(which in 0usize..6, v in 0usize..32, t in 1i64..9) {
        let (_, g) = unit_graphs().swap_remove(which);
        let id = g.vertices()[v % g.vertices().len()].id;
        let h = g.gauge_transform(id, &Cyclo8::from_i64(t)).unwrap();
        for (a, b) in g.edges().iter().zip(h.edges()) {
            prop_assert_eq!((a.cross_rim, a.cross_cut, &a.lift), (b.cross_rim, b.cross_cut, &b.lift));
        }
        // recomputing crossings from the curves gives the same integers
        if let Some(cp) = g.curves() {
            let mut k = h.clone();
            k.set_curves(cp.clone()).unwrap();
            prop_assert_eq!(k, h);
        }
    }
}
