//! Kasteleyn markings: construction, face and cycle conditions.

use std::collections::{BTreeMap, VecDeque};

use serde_json::Value;

use crate::algebra::{AlgebraError, Scalar};
use crate::torus::{Color, Face, ToricGraph};

use super::gf2::Gf2System;
use super::DimerError;

/// One value per edge, in the order of `ToricGraph::edges()`.
#[derive(Clone, Debug, PartialEq)]
pub struct Marking<S> {
    pub values: Vec<S>,
}

impl<S: Scalar> Marking<S> {
    pub fn uniform(n: usize, v: S) -> Self {
        Marking { values: vec![v; n] }
    }

    /// Negates the value on every edge selected by `pick`.
    pub fn flipped<T: Scalar>(&self, g: &ToricGraph<T>, pick: impl Fn(usize) -> bool) -> Self {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| if pick(i) && i < g.edges().len() { -v.clone() } else { v.clone() })
            .collect();
        Marking { values }
    }

    pub fn to_json<T: Scalar>(&self, g: &ToricGraph<T>) -> Value {
        let m: serde_json::Map<String, Value> =
            g.edges().iter().zip(&self.values).map(|(e, v)| (e.id.to_string(), v.to_literal())).collect();
        Value::Object(m)
    }
}

/// Solves the face parity system for a `+1/-1` marking: one unknown per
/// edge (`1` meaning the value `-1`), one equation per face requiring
/// `l(f)/2 + 1` sign changes modulo 2.
pub fn find_kasteleyn_marking<S: Scalar>(g: &ToricGraph<S>, faces: &[Face]) -> Result<Marking<S>, DimerError> {
    let mut sys = Gf2System::new(g.edges().len());
    for f in faces {
        let support = f.walk.iter().map(|&(id, _)| g.edge_index(id).expect("face edge exists"));
        sys.push(support, (f.len() / 2 + 1) % 2 == 1);
    }
    let x = sys.solve().ok_or(DimerError::NoKasteleynSolution)?;
    Ok(Marking { values: x.into_iter().map(|b| if b { -S::one() } else { S::one() }).collect() })
}

/// Product along a walk of `k(e)` for sides traversed white to black and
/// `1 / k(e)` for sides traversed black to white.
pub fn alternating_product<S: Scalar>(g: &ToricGraph<S>, walk: &[(u32, bool)], m: &Marking<S>) -> Result<S, AlgebraError> {
    let mut acc = S::one();
    for &(id, fwd) in walk {
        let i = g.edge_index(id).expect("walk edge exists");
        let e = &g.edges()[i];
        let origin = if fwd { e.tail } else { e.head };
        let k = &m.values[i];
        acc = if g.vertex(origin).color == Color::White { acc * k } else { acc * &k.inv()? };
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FaceCheck<S> {
    pub face: usize,
    pub length: usize,
    pub product: S,
    pub expected: S,
    pub ok: bool,
}

/// Face condition: the alternating product around each face equals
/// `(-1)^(l/2 + 1)`.
pub fn check_faces<S: Scalar>(g: &ToricGraph<S>, faces: &[Face], m: &Marking<S>, tol: f64) -> Result<Vec<FaceCheck<S>>, AlgebraError> {
    faces
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let product = alternating_product(g, &f.walk, m)?;
            let expected = if (f.len() / 2 + 1) % 2 == 0 { S::one() } else { -S::one() };
            let ok = product.approx_eq(&expected, tol);
            Ok(FaceCheck { face: k, length: f.len(), product, expected, ok })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CycleCheck<S> {
    pub walk: Vec<(u32, bool)>,
    /// `(cut, rim)` crossing sum along the walk.
    pub class: (i64, i64),
    pub product: S,
    /// `Some(+1 or -1)` when the product is a sign.
    pub sign: Option<i8>,
}

/// Fundamental cycles of a breadth-first spanning tree rooted at the
/// smallest vertex id; together they span the cycle space.
pub fn fundamental_cycles<S: Scalar>(g: &ToricGraph<S>) -> Vec<Vec<(u32, bool)>> {
    let n = g.vertices().len();
    if n == 0 {
        return Vec::new();
    }
    let idx = |id: u32| g.vertex_index(id).unwrap();
    // parent[v] = (edge index, edge runs from v toward the parent)
    let mut parent: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; g.edges().len()];
    let mut queue = VecDeque::new();
    depth[0] = 0;
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        let vid = g.vertices()[v].id;
        for i in g.incident(vid) {
            let e = &g.edges()[i];
            let u = idx(e.other_end(vid));
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = Some((i, e.tail == g.vertices()[u].id));
                tree[i] = true;
                queue.push_back(u);
            }
        }
    }
    let step_up = |v: usize| -> (usize, (u32, bool)) {
        let (i, toward) = parent[v].unwrap();
        let e = &g.edges()[i];
        let up = idx(e.other_end(g.vertices()[v].id));
        (up, (e.id, toward))
    };
    let mut cycles = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if tree[i] {
            continue;
        }
        // e from a to b, then back from b to a through the tree
        let (mut a, mut b) = (idx(e.tail), idx(e.head));
        let mut from_b = Vec::new();
        let mut to_a = Vec::new();
        while depth[b] > depth[a] {
            let (up, s) = step_up(b);
            from_b.push(s);
            b = up;
        }
        while depth[a] > depth[b] {
            let (up, s) = step_up(a);
            to_a.push((s.0, !s.1));
            a = up;
        }
        while a != b {
            let (ub, sb) = step_up(b);
            from_b.push(sb);
            b = ub;
            let (ua, sa) = step_up(a);
            to_a.push((sa.0, !sa.1));
            a = ua;
        }
        let mut walk = vec![(e.id, true)];
        walk.extend(from_b);
        walk.extend(to_a.into_iter().rev());
        cycles.push(walk);
    }
    cycles
}

pub fn walk_class<S: Scalar>(g: &ToricGraph<S>, walk: &[(u32, bool)]) -> (i64, i64) {
    walk.iter().fold((0, 0), |acc, &(id, fwd)| {
        let e = g.edge(id);
        let s = if fwd { 1 } else { -1 };
        (acc.0 + s * e.cross_cut, acc.1 + s * e.cross_rim)
    })
}

/// Cycle condition on every fundamental cycle.
pub fn check_cycles<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>, tol: f64) -> Result<Vec<CycleCheck<S>>, AlgebraError> {
    fundamental_cycles(g)
        .into_iter()
        .map(|walk| {
            let product = alternating_product(g, &walk, m)?;
            let sign = if product.approx_eq(&S::one(), tol) {
                Some(1)
            } else if product.approx_eq(&-S::one(), tol) {
                Some(-1)
            } else {
                None
            };
            let class = walk_class(g, &walk);
            Ok(CycleCheck { walk, class, product, sign })
        })
        .collect()
}

/// The marking and its three companions, in the order: unchanged, negated
/// on edges with odd rim crossing, on edges with odd cut crossing, on both.
pub fn spin_variants<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>) -> [Marking<S>; 4] {
    let odd_rim = |i: usize| g.edges()[i].cross_rim.rem_euclid(2) == 1;
    let odd_cut = |i: usize| g.edges()[i].cross_cut.rem_euclid(2) == 1;
    [
        m.clone(),
        m.flipped(g, odd_rim),
        m.flipped(g, odd_cut),
        m.flipped(g, odd_rim).flipped(g, odd_cut),
    ]
}

/// Marking as a map from edge id.
pub fn by_edge_id<S: Scalar>(g: &ToricGraph<S>, m: &Marking<S>) -> BTreeMap<u32, S> {
    g.edges().iter().zip(&m.values).map(|(e, v)| (e.id, v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::instances::{example1_exact, square_grid, GridPattern};
    use crate::torus::compute_faces;

    #[test]
    fn solver_output_satisfies_faces() {
        for g in [
            example1_exact([1; 6], false),
            square_grid(4, 2, GridPattern::Parallel, |_| Cyclo8::from_int(1)),
            square_grid(4, 4, GridPattern::Alternating, |_| Cyclo8::from_int(1)),
        ] {
            let faces = compute_faces(&g).unwrap();
            let m = find_kasteleyn_marking(&g, &faces).unwrap();
            assert!(check_faces(&g, &faces, &m, 0.0).unwrap().iter().all(|c| c.ok));
            for v in spin_variants(&g, &m) {
                assert!(check_faces(&g, &faces, &v, 0.0).unwrap().iter().all(|c| c.ok));
                assert!(check_cycles(&g, &v, 0.0).unwrap().iter().all(|c| c.sign.is_some()));
            }
        }
    }

    #[test]
    fn fundamental_cycles_close() {
        let g = square_grid(4, 4, GridPattern::Parallel, |_| Cyclo8::from_int(1));
        let cycles = fundamental_cycles(&g);
        assert_eq!(cycles.len(), g.edges().len() - g.vertices().len() + 1);
        let mut classes = Vec::new();
        for c in &cycles {
            let mut at = if c[0].1 { g.edge(c[0].0).tail } else { g.edge(c[0].0).head };
            let start = at;
            for &(id, fwd) in c {
                let e = g.edge(id);
                assert_eq!(at, if fwd { e.tail } else { e.head });
                at = if fwd { e.head } else { e.tail };
            }
            assert_eq!(at, start);
            classes.push(walk_class(&g, c));
        }
        // the cycles reach both homology directions
        assert!(classes.iter().any(|c| c.0 != 0));
        assert!(classes.iter().any(|c| c.1 != 0));
    }

    #[test]
    fn flipping_twice_is_identity() {
        let g = example1_exact([1; 6], false);
        let m = Marking::uniform(6, Cyclo8::from_int(1));
        let odd = |i: usize| g.edges()[i].cross_rim.rem_euclid(2) == 1;
        assert_eq!(m.flipped(&g, odd).flipped(&g, odd), m);
    }
}
