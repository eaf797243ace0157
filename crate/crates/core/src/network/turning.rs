//! Turning numbers of white-to-black edges and the marking they define.

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{Scalar, TurnAngle};
use crate::dimer::{check_cycles, check_faces, CycleCheck, FaceCheck, Marking};
use crate::torus::geometry::{signed_angle, SignedAngle};
use crate::torus::{Face, ToricGraph};

use super::perfect::PerfectNetwork;
use super::NetworkError;

#[derive(Clone, Debug, PartialEq)]
pub struct TurningEntry<S> {
    pub edge: u32,
    pub predecessor: u32,
    pub successor: u32,
    pub alpha_minus: SignedAngle,
    pub alpha_plus: SignedAngle,
    pub turn: S,
}

/// One entry per white-to-black edge, in edge order.
#[derive(Clone, Debug, PartialEq)]
pub struct TurningData<S> {
    pub entries: Vec<TurningEntry<S>>,
}

impl<S: Scalar> TurningData<S> {
    pub fn turn_of(&self, edge: u32) -> Option<&S> {
        self.entries.iter().find(|t| t.edge == edge).map(|t| &t.turn)
    }
}

fn sum_angle(a: SignedAngle, b: SignedAngle) -> TurnAngle {
    let rad = |x: SignedAngle| match x {
        SignedAngle::Quarter(k) => k as f64 * std::f64::consts::FRAC_PI_2,
        SignedAngle::Radians(t) => t,
        SignedAngle::Straight => unreachable!(),
    };
    match (a, b) {
        (SignedAngle::Quarter(p), SignedAngle::Quarter(q)) => TurnAngle::QuarterTurns(p + q),
        _ => TurnAngle::Radians(rad(a) + rad(b)),
    }
}

/// `turn(e) = exp(i (alpha_- + alpha_+) / 2)` where `alpha_-` turns the
/// predecessor of `e` into `e` and `alpha_+` turns `e` into its successor.
pub fn turning_numbers<S: Scalar>(n: &PerfectNetwork<S>) -> Result<TurningData<S>, NetworkError> {
    let g = &n.graph;
    let mut entries = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if !n.is_white_to_black(i) {
            continue;
        }
        let single = |v: Vec<usize>, what: &str, vid: u32| match v.as_slice() {
            [k] => Ok(*k),
            _ => Err(NetworkError::NotPerfect(format!("vertex {vid} has {} {what} edges", v.len()))),
        };
        let p = single(n.incoming(e.tail), "incoming", e.tail)?;
        let s = single(n.outgoing(e.head), "outgoing", e.head)?;
        let (pe, se) = (&g.edges()[p], &g.edges()[s]);
        let alpha_minus = signed_angle(&pe.lift, &e.lift);
        let alpha_plus = signed_angle(&e.lift, &se.lift);
        if alpha_minus == SignedAngle::Straight || alpha_plus == SignedAngle::Straight {
            return Err(NetworkError::StraightAngle(e.id));
        }
        let turn = S::half_angle_unit(sum_angle(alpha_minus, alpha_plus))?;
        entries.push(TurningEntry { edge: e.id, predecessor: pe.id, successor: se.id, alpha_minus, alpha_plus, turn });
    }
    Ok(TurningData { entries })
}

/// `turn(e)` on white-to-black edges and `-1` on black-to-white edges.
pub fn fractional_marking<S: Scalar>(n: &PerfectNetwork<S>) -> Result<Marking<S>, NetworkError> {
    if !n.graph.is_bipartite() {
        return Err(NetworkError::NotBipartite);
    }
    let t = turning_numbers(n)?;
    let values = n
        .graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| if n.is_white_to_black(i) { t.turn_of(e.id).unwrap().clone() } else { -S::one() })
        .collect();
    Ok(Marking { values })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SwitchCount {
    pub face: usize,
    pub length: usize,
    pub switches: usize,
    pub black_to_white: usize,
    pub ok: bool,
}

/// Switches of a face (vertices where the two boundary edges have opposite
/// orientations) against `l(f) - 2 bw(f)`.
pub fn switch_counts<S: Scalar>(n: &PerfectNetwork<S>, faces: &[Face]) -> Vec<SwitchCount> {
    let g = &n.graph;
    faces
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let l = f.len();
            let switches = (0..l).filter(|&j| f.walk[j].1 != f.walk[(j + 1) % l].1).count();
            let black_to_white = f.walk.iter().filter(|&&(id, _)| n.is_black_to_white(g.edge_index(id).unwrap())).count();
            let ok = switches as i64 == l as i64 - 2 * black_to_white as i64;
            SwitchCount { face: k, length: l, switches, black_to_white, ok }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MarkingReport<S> {
    pub faces: Vec<FaceCheck<S>>,
    pub cycles: Vec<CycleCheck<S>>,
    pub switches: Vec<SwitchCount>,
}

impl<S: Scalar> MarkingReport<S> {
    pub fn ok(&self) -> bool {
        self.faces.iter().all(|f| f.ok) && self.cycles.iter().all(|c| c.sign.is_some()) && self.switches.iter().all(|s| s.ok)
    }

    pub fn to_json(&self) -> Value {
        let faces: Vec<Value> = self
            .faces
            .iter()
            .map(|f| {
                serde_json::json!({
                    "face": f.face, "length": f.length,
                    "product": f.product.to_literal(), "expected": f.expected.to_literal(), "ok": f.ok,
                })
            })
            .collect();
        let cycles: Vec<Value> = self
            .cycles
            .iter()
            .map(|c| {
                serde_json::json!({
                    "walk": c.walk.iter().map(|&(id, fwd)| if fwd { id as i64 } else { -(id as i64) - 1 }).collect::<Vec<_>>(),
                    "class": [c.class.0, c.class.1], "product": c.product.to_literal(), "sign": c.sign,
                })
            })
            .collect();
        serde_json::json!({ "ok": self.ok(), "faces": faces, "cycles": cycles, "switches": self.switches })
    }
}

/// Face condition, cycle condition on a cycle basis, and the switch count
/// on every face.
pub fn verify_marking<S: Scalar>(n: &PerfectNetwork<S>, faces: &[Face], m: &Marking<S>, tol: f64) -> Result<MarkingReport<S>, NetworkError> {
    let g: &ToricGraph<S> = &n.graph;
    Ok(MarkingReport {
        faces: check_faces(g, faces, m, tol)?,
        cycles: check_cycles(g, m, tol)?,
        switches: switch_counts(n, faces),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Approx, Cyclo8, DEFAULT_TOL};
    use crate::instances::{example1_exact, perturb, square_grid, GridPattern};
    use crate::torus::{compute_faces, Color};
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn example1_turns_are_one() {
        let n = PerfectNetwork::new(example1_exact([1; 6], false));
        let t = turning_numbers(&n).unwrap();
        assert_eq!(t.entries.iter().map(|e| e.edge).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
        assert!(t.entries.iter().all(|e| e.turn == Cyclo8::from_int(1)));
    }

    #[test]
    fn alternating_grid_labels() {
        // rows 0 and 2 run right, rows 1 and 3 run left; vertical edges
        // between an upper left-running row and a lower right-running row
        // get i, the others -i
        let g = square_grid(4, 4, GridPattern::Alternating, |_| Cyclo8::from_int(1));
        let n = PerfectNetwork::new(g.clone());
        let m = fractional_marking(&n).unwrap();
        let i = Cyclo8::zeta_pow(2);
        for (k, e) in g.edges().iter().enumerate() {
            let row = |v: u32| v as usize / 4;
            let expect = if e.id % 2 == 0 {
                if g.vertex(e.tail).color == Color::White { Cyclo8::from_int(1) } else { Cyclo8::from_int(-1) }
            } else {
                let lower = if e.lift.y.is_positive() { row(e.tail) } else { row(e.head) };
                if lower % 2 == 0 { i.clone() } else { -i.clone() }
            };
            assert_eq!(m.values[k], expect, "edge {}", e.id);
        }
        let faces = compute_faces(&g).unwrap();
        assert!(verify_marking(&n, &faces, &m, 0.0).unwrap().ok());
    }

    #[test]
    fn parallel_grid_marking_is_the_orientation() {
        let g = square_grid(4, 2, GridPattern::Parallel, |_| Cyclo8::from_int(1));
        let n = PerfectNetwork::new(g.clone());
        let m = fractional_marking(&n).unwrap();
        for (k, _) in g.edges().iter().enumerate() {
            let s = if n.is_white_to_black(k) { 1 } else { -1 };
            assert_eq!(m.values[k], Cyclo8::from_int(s));
        }
        let faces = compute_faces(&g).unwrap();
        let r = verify_marking(&n, &faces, &m, 0.0).unwrap();
        assert!(r.ok());
        // one black-to-white edge per face
        assert!(r.switches.iter().all(|s| s.black_to_white == 1));
    }

    #[test]
    fn perturbed_grid_in_float() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = square_grid(4, 4, GridPattern::Alternating, |_| Approx::real(1.0));
        for _ in 0..5 {
            let p = perturb(&g.without_curves(), &mut rng, 1000, 10);
            let n = PerfectNetwork::new(p.clone());
            let m = fractional_marking(&n).unwrap();
            let faces = compute_faces(&p).unwrap();
            let r = verify_marking(&n, &faces, &m, DEFAULT_TOL).unwrap();
            assert!(r.ok());
            assert!(m.values.iter().all(|v| (v.0.norm() - 1.0).abs() < 1e-12));
        }
        let p = perturb(&g.without_curves().map_weights(|_| Cyclo8::from_int(1)), &mut rng, 1000, 10);
        assert!(turning_numbers(&PerfectNetwork::new(p)).is_err());
    }
}
