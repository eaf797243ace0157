//! Bipartite doubling and the weight map between a network and its graph.

use crate::algebra::Scalar;
use crate::torus::geometry::q;
use crate::torus::{Color, Edge, Point, ToricGraph, Vertex};

use super::perfect::PerfectNetwork;
use super::NetworkError;

/// Result of splitting every unicolored edge.
#[derive(Clone, Debug, PartialEq)]
pub struct Doubling<S> {
    pub network: PerfectNetwork<S>,
    /// For each original edge id, the ids of its pieces in path order.
    pub pieces: Vec<(u32, Vec<u32>)>,
}

fn point_along(p: &Point, lift: &Point, t: &crate::torus::geometry::Q) -> Point {
    let m = &(p + &lift.scale(t));
    let fl = |x: &crate::torus::geometry::Q| x - x.floor();
    Point::new(fl(&m.x), fl(&m.y))
}

/// Split parameters tried in order: the midpoint, then points avoiding the
/// rim and cut.
const SPLITS: [(i64, i64); 7] = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)];

/// Splits edge `id` by a new vertex of the given color, at its midpoint
/// unless that lies on the rim or cut. The first piece keeps the id and the
/// full weight, the second gets weight 1.
pub(crate) fn split_edge<S: Scalar>(g: &ToricGraph<S>, id: u32, color: Color) -> Result<(ToricGraph<S>, u32, u32), NetworkError> {
    let e = g.edge_index(id).map(|i| g.edges()[i].clone()).ok_or(NetworkError::UnknownEdge(id))?;
    let mut last = None;
    for (a, b) in SPLITS {
        let t = q(a, b);
        let pos = point_along(&g.vertex(e.tail).pos, &e.lift, &t);
        if let Some(c) = g.curves() {
            if c.rim.contains_point(&pos) || c.cut.contains_point(&pos) {
                continue;
            }
        }
        match split_at(g, &e, color, pos, &t) {
            Ok(r) => return Ok(r),
            Err(err) => last = Some(err),
        }
    }
    Err(last.unwrap_or(NetworkError::Torus(crate::torus::TorusError::EdgeTouchesCurve { edge: id, curve: "rim" })))
}

fn split_at<S: Scalar>(g: &ToricGraph<S>, e: &Edge<S>, color: Color, pos: Point, t: &crate::torus::geometry::Q) -> Result<(ToricGraph<S>, u32, u32), NetworkError> {
    let (mut vertices, mut edges, curves) = g.clone().into_parts();
    let vid = vertices.iter().map(|v| v.id).max().map_or(0, |m| m + 1);
    let eid = edges.iter().map(|e| e.id).max().map_or(0, |m| m + 1);
    let first_lift = e.lift.scale(t);
    let second_lift = &e.lift - &first_lift;
    vertices.push(Vertex { id: vid, color, pos });
    let has_curves = curves.is_some();
    let first = edges.iter_mut().find(|x| x.id == e.id).unwrap();
    first.head = vid;
    first.lift = first_lift;
    if has_curves {
        first.cross_rim = 0;
        first.cross_cut = 0;
    }
    edges.push(Edge { id: eid, tail: vid, head: e.head, weight: S::one(), lift: second_lift, cross_rim: 0, cross_cut: 0 });
    Ok((ToricGraph::new(vertices, edges, curves)?, vid, eid))
}

/// Inserts an opposite-colored vertex in the middle of every unicolored edge.
pub fn bipartite_double<S: Scalar>(n: &PerfectNetwork<S>) -> Result<Doubling<S>, NetworkError> {
    let mut g = n.graph.clone();
    let mut pieces = Vec::new();
    for e in n.graph.edges() {
        let c = n.graph.vertex(e.tail).color;
        if c == n.graph.vertex(e.head).color {
            let (h, _, eid) = split_edge(&g, e.id, c.opposite())?;
            g = h;
            pieces.push((e.id, vec![e.id, eid]));
        } else {
            pieces.push((e.id, vec![e.id]));
        }
    }
    Ok(Doubling { network: PerfectNetwork::new(g), pieces })
}

/// Weights on the bipartite graph: reciprocals on black-to-white edges,
/// white-to-black weights unchanged.
pub fn psi_map<S: Scalar>(n: &PerfectNetwork<S>) -> Result<ToricGraph<S>, NetworkError> {
    if !n.graph.is_bipartite() {
        return Err(NetworkError::NotBipartite);
    }
    let mut w = Vec::with_capacity(n.graph.edges().len());
    for (i, e) in n.graph.edges().iter().enumerate() {
        w.push(if n.is_black_to_white(i) {
            e.weight.inv().map_err(|_| NetworkError::ZeroWeightOnCoverEdge(e.id))?
        } else {
            e.weight.clone()
        });
    }
    Ok(n.graph.with_weights(&w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::instances::example1_exact;
    use crate::network::perfect::validate_network;
    use crate::torus::CurvePair;
    use num_rational::BigRational;

    #[test]
    fn example1_psi() {
        let n = PerfectNetwork::new(example1_exact([2, 3, 5, 7, 11, 13], false));
        let psi = psi_map(&n).unwrap();
        let r = |a: i64, b: i64| Cyclo8::from_rational(BigRational::new(a.into(), b.into()));
        assert_eq!(psi.weights(), vec![r(2, 1), r(3, 1), r(5, 1), r(1, 7), r(1, 11), r(13, 1)]);
        let back = psi_map(&PerfectNetwork::new(psi)).unwrap();
        assert_eq!(back, n.graph);
        let d = bipartite_double(&n).unwrap();
        assert_eq!(d.network, n);
    }

    #[test]
    fn black_two_cycle() {
        // two black vertices joined by two edges forming a directed cycle
        let p = Point::from_ratios;
        let vertices = vec![
            Vertex { id: 0, color: Color::Black, pos: p(1, 4, 1, 4) },
            Vertex { id: 1, color: Color::Black, pos: p(3, 4, 1, 4) },
        ];
        let edges = vec![
            Edge { id: 0, tail: 0, head: 1, weight: Cyclo8::from_int(3), lift: p(1, 2, 0, 1), cross_rim: 0, cross_cut: 0 },
            Edge { id: 1, tail: 1, head: 0, weight: Cyclo8::from_int(5), lift: p(1, 2, 0, 1), cross_rim: 0, cross_cut: 0 },
        ];
        let g = ToricGraph::new(vertices, edges, None::<CurvePair>).unwrap();
        let d = bipartite_double(&PerfectNetwork::new(g)).unwrap();
        let h = &d.network.graph;
        assert_eq!(h.vertices().len(), 4);
        assert_eq!(h.edges().len(), 4);
        assert!(h.is_bipartite());
        assert_eq!(h.ids_of_color(Color::White).len(), 2);
        // perfectness only (this graph is not a valid torus embedding)
        let (r, _) = validate_network(&d.network);
        assert!(!r.has(crate::torus::ViolationCode::PerfectnessViolation));
        for (orig, ps) in &d.pieces {
            let prod = ps.iter().fold(Cyclo8::from_int(1), |a, id| a * &h.edge(*id).weight);
            assert_eq!(prod, Cyclo8::from_int(if *orig == 0 { 3 } else { 5 }));
        }
    }
}
