//! Face tracing from the geometric rotation system.

use std::collections::HashMap;

use crate::algebra::Scalar;

use super::geometry::{same_direction, Point};
use super::graph::ToricGraph;
use super::TorusError;

/// A boundary walk, face on the left. Entries are `(edge id, forward)` where
/// `forward` means the walk runs from tail to head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<(u32, bool)>,
}

impl Face {
    /// Number of sides, counted with multiplicity; equals the number of
    /// boundary vertices with multiplicity.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn lift_sum<S: Scalar>(&self, g: &ToricGraph<S>) -> Point {
        self.walk.iter().fold(Point::zero(), |acc, &(id, fwd)| {
            let l = &g.edge(id).lift;
            if fwd {
                &acc + l
            } else {
                &acc - l
            }
        })
    }

    /// Sum of `(cross_rim, cross_cut)` along the walk.
    pub fn crossing_sum<S: Scalar>(&self, g: &ToricGraph<S>) -> (i64, i64) {
        self.walk.iter().fold((0, 0), |acc, &(id, fwd)| {
            let e = g.edge(id);
            let s = if fwd { 1 } else { -1 };
            (acc.0 + s * e.cross_rim, acc.1 + s * e.cross_cut)
        })
    }

    /// Vertices in walk order: the origin of each traversed side.
    pub fn vertices<S: Scalar>(&self, g: &ToricGraph<S>) -> Vec<u32> {
        self.walk
            .iter()
            .map(|&(id, fwd)| {
                let e = g.edge(id);
                if fwd {
                    e.tail
                } else {
                    e.head
                }
            })
            .collect()
    }
}

/// All faces, each walk starting at its smallest half-edge; faces ordered by
/// that half-edge (so by smallest edge id).
pub fn compute_faces<S: Scalar>(g: &ToricGraph<S>) -> Result<Vec<Face>, TorusError> {
    let nh = 2 * g.edges().len();
    let mut rot: HashMap<u32, Vec<usize>> = HashMap::new();
    let mut pos = vec![0usize; nh];
    for v in g.vertices() {
        let r = g.rotation(v.id);
        for (k, &h) in r.iter().enumerate() {
            pos[h] = k;
        }
        for w in 0..r.len() {
            let (a, b) = (r[w], r[(w + 1) % r.len()]);
            if r.len() > 1 && same_direction(&g.half_direction(a), &g.half_direction(b)) {
                return Err(TorusError::DegenerateAngles(v.id));
            }
        }
        rot.insert(v.id, r);
    }
    let next = |h: usize| {
        let t = h ^ 1;
        let r = &rot[&g.half_origin(t)];
        r[(pos[t] + r.len() - 1) % r.len()]
    };
    let mut seen = vec![false; nh];
    let mut faces = Vec::new();
    for start in 0..nh {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            walk.push((g.edges()[h / 2].id, h % 2 == 0));
            h = next(h);
        }
        faces.push(Face { walk });
    }
    Ok(faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::torus::graph::{Color, Edge, Vertex};

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::from_ratios(xn, xd, yn, yd)
    }

    /// One white and one black vertex joined by three edges.
    fn theta() -> ToricGraph<Cyclo8> {
        let vertices = vec![
            Vertex { id: 0, color: Color::White, pos: pt(1, 4, 1, 4) },
            Vertex { id: 1, color: Color::Black, pos: pt(1, 2, 1, 2) },
        ];
        let lifts = [pt(1, 4, 1, 4), pt(-3, 4, 1, 4), pt(1, 4, -3, 4)];
        let edges = lifts
            .into_iter()
            .enumerate()
            .map(|(i, lift)| Edge { id: i as u32, tail: 0, head: 1, weight: Cyclo8::from_int(1), lift, cross_rim: 0, cross_cut: 0 })
            .collect();
        ToricGraph::new(vertices, edges, None).unwrap()
    }

    #[test]
    fn theta_has_one_hexagon() {
        let g = theta();
        let f = compute_faces(&g).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].len(), 6);
        assert!(f[0].lift_sum(&g).is_zero());
    }

    #[test]
    fn parallel_edges_are_degenerate() {
        let mut g = theta();
        g.edge_mut(2).unwrap().lift = pt(5, 4, 5, 4);
        assert_eq!(compute_faces(&g), Err(TorusError::DegenerateAngles(0)));
    }
}
