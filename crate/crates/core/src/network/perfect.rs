//! Perfect orientations and rim/cut admissibility.

use crate::algebra::Scalar;
use crate::torus::geometry::same_direction;
use crate::torus::{validate_graph, Color, Face, ToricGraph, ValidationReport, ViolationCode};

/// A toric graph read as a network: every edge is directed from its stored
/// tail to its stored head.
#[derive(Clone, Debug, PartialEq)]
pub struct PerfectNetwork<S> {
    pub graph: ToricGraph<S>,
}

impl<S: Scalar> PerfectNetwork<S> {
    pub fn new(graph: ToricGraph<S>) -> Self {
        PerfectNetwork { graph }
    }

    /// Edge indices entering vertex `id`.
    pub fn incoming(&self, id: u32) -> Vec<usize> {
        (0..self.graph.edges().len()).filter(|&i| self.graph.edges()[i].head == id).collect()
    }

    /// Edge indices leaving vertex `id`.
    pub fn outgoing(&self, id: u32) -> Vec<usize> {
        (0..self.graph.edges().len()).filter(|&i| self.graph.edges()[i].tail == id).collect()
    }

    pub fn is_black_to_white(&self, i: usize) -> bool {
        let e = &self.graph.edges()[i];
        self.graph.vertex(e.tail).color == Color::Black && self.graph.vertex(e.head).color == Color::White
    }

    pub fn is_white_to_black(&self, i: usize) -> bool {
        let e = &self.graph.edges()[i];
        self.graph.vertex(e.tail).color == Color::White && self.graph.vertex(e.head).color == Color::Black
    }
}

/// Underlying graph checks plus perfectness: one incoming edge at each white
/// vertex and one outgoing edge at each black vertex.
pub fn validate_network<S: Scalar>(n: &PerfectNetwork<S>) -> (ValidationReport, Option<Vec<Face>>) {
    let (mut r, faces) = validate_graph(&n.graph);
    for v in n.graph.vertices() {
        let (what, count) = match v.color {
            Color::White => ("incoming", n.incoming(v.id).len()),
            Color::Black => ("outgoing", n.outgoing(v.id).len()),
        };
        if count != 1 {
            r.push(ViolationCode::PerfectnessViolation, format!("{} vertex {} has {count} {what} edges", v.color, v.id));
        }
    }
    (r, faces)
}

/// Rim must be simple, avoid vertices and be crossed by every edge with
/// sign `+1`; the cut must be simple and cross the rim once, positively.
pub fn validate_rim_cut<S: Scalar>(n: &PerfectNetwork<S>) -> ValidationReport {
    let mut r = ValidationReport::default();
    let g = &n.graph;
    let Some(c) = g.curves() else {
        r.push(ViolationCode::MissingCurves, "no rim and cut given");
        return r;
    };
    for (name, curve) in [("rim", &c.rim), ("cut", &c.cut)] {
        if !curve.is_simple() {
            r.push(ViolationCode::CurveNotSimple, format!("{name} intersects itself"));
        }
        for v in g.vertices() {
            if curve.contains_point(&v.pos) {
                r.push(ViolationCode::CurveThroughVertex, format!("{name} passes through vertex {}", v.id));
            }
        }
    }
    let mut signs = Vec::new();
    for e in g.edges() {
        match g.rim_hits(e.id) {
            Ok(hits) => signs.extend(hits.iter().map(|h| (e.id, h.sign))),
            Err(err) => r.push(ViolationCode::CurveThroughVertex, err.to_string()),
        }
    }
    let pos: Vec<u32> = signs.iter().filter(|s| s.1 > 0).map(|s| s.0).collect();
    let neg: Vec<u32> = signs.iter().filter(|s| s.1 < 0).map(|s| s.0).collect();
    if !pos.is_empty() && !neg.is_empty() {
        r.push(ViolationCode::NotIdeal, format!("edges {pos:?} cross the rim positively and {neg:?} negatively"));
    } else if !neg.is_empty() {
        r.push(ViolationCode::RimOrientation, format!("all rim crossings (edges {neg:?}) are negative; reverse the rim"));
    }
    match c.rim.crossings_with(&c.cut) {
        Ok(x) if x == vec![1] => {}
        Ok(x) => r.push(ViolationCode::CutNotSimpleCrossing, format!("cut meets the rim with signs {x:?}; expected one +1 crossing")),
        Err(err) => r.push(ViolationCode::CutNotSimpleCrossing, err.to_string()),
    }
    r
}

/// Conditions assumed by the proof of the identity but not required by the
/// constructions: rim crossers run black to white, are parallel, and the
/// vertices next to sources are white.
pub fn preprocessing_report<S: Scalar>(n: &PerfectNetwork<S>) -> ValidationReport {
    let mut r = ValidationReport::default();
    let g = &n.graph;
    let crossers: Vec<usize> = (0..g.edges().len()).filter(|&i| g.edges()[i].cross_rim != 0).collect();
    for &i in &crossers {
        let e = &g.edges()[i];
        if !n.is_black_to_white(i) {
            r.push(ViolationCode::RimCrosserNotBlackToWhite, format!("edge {} crosses the rim but is not black-to-white", e.id));
        }
        if g.vertex(e.head).color != Color::White {
            r.push(ViolationCode::SourceAdjacentNotWhite, format!("edge {} leaves the rim into black vertex {}", e.id, e.head));
        }
    }
    if let Some(&first) = crossers.first() {
        let d = &g.edges()[first].lift;
        for &i in &crossers[1..] {
            if !same_direction(d, &g.edges()[i].lift) {
                r.push(
                    ViolationCode::RimCrossersNotParallel,
                    format!("edges {} and {} cross the rim in different directions", g.edges()[first].id, g.edges()[i].id),
                );
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::instances::{example1_exact, square_grid, GridPattern};
    use crate::torus::{Curve, CurvePair, Point};

    #[test]
    fn example1_is_perfect_with_ideal_rim() {
        for switched in [false, true] {
            let n = PerfectNetwork::new(example1_exact([1; 6], switched));
            let (r, _) = validate_network(&n);
            assert!(r.is_ok(), "{:?}", r.violations);
            let r = validate_rim_cut(&n);
            assert!(r.is_ok(), "{:?}", r.violations);
        }
        let pre = preprocessing_report(&PerfectNetwork::new(example1_exact([1; 6], false)));
        assert!(pre.has(ViolationCode::RimCrosserNotBlackToWhite));
    }

    #[test]
    fn reversing_an_edge_breaks_perfectness() {
        let g = example1_exact([1; 6], false);
        let (v, mut edges, c) = g.into_parts();
        let e = &mut edges[2];
        std::mem::swap(&mut e.tail, &mut e.head);
        e.lift = -&e.lift;
        let n = PerfectNetwork::new(ToricGraph::new(v, edges, c).unwrap());
        assert!(validate_network(&n).0.has(ViolationCode::PerfectnessViolation));
    }

    #[test]
    fn grids_are_perfect() {
        for p in [GridPattern::Parallel, GridPattern::Alternating] {
            let n = PerfectNetwork::new(square_grid(4, 4, p, |_| Cyclo8::from_int(1)));
            assert!(validate_network(&n).0.is_ok());
        }
        // alternating rows cross the rim in both directions
        let n = PerfectNetwork::new(square_grid(4, 4, GridPattern::Alternating, |_| Cyclo8::from_int(1)));
        assert!(validate_rim_cut(&n).has(ViolationCode::NotIdeal));
    }

    #[test]
    fn cut_crossing_rim_twice() {
        let g = example1_exact([1; 6], false);
        let (v, mut e, _) = g.into_parts();
        for x in &mut e {
            (x.cross_rim, x.cross_cut) = (0, 0);
        }
        let p = Point::from_ratios;
        let curves = CurvePair {
            rim: Curve::new(vec![p(0, 1, 1, 2), p(0, 1, 3, 2)]).unwrap(),
            // class (2, 1): meets the vertical rim twice
            cut: Curve::new(vec![p(1, 2, 1, 8), p(5, 2, 9, 8)]).unwrap(),
        };
        let g = ToricGraph::new(v, e, Some(curves)).expect("valid curves");
        assert!(validate_rim_cut(&PerfectNetwork::new(g)).has(ViolationCode::CutNotSimpleCrossing));
    }
}
