//! Straight-edge graphs on the flat unit torus.

use std::fmt;

use crate::algebra::Scalar;

use super::curves::{CurveHit, CurvePair};
use super::geometry::{angle_cmp, Point};
use super::TorusError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: u32,
    pub color: Color,
    pub pos: Point,
}

/// An edge. `tail` and `head` are vertex ids; `lift` is the displacement
/// from tail to head along a straight lift to the plane. The crossing counts
/// refer to the stored direction tail -> head.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge<S> {
    pub id: u32,
    pub tail: u32,
    pub head: u32,
    pub weight: S,
    pub lift: Point,
    /// `<rim, e>`.
    pub cross_rim: i64,
    /// `<e, cut>`.
    pub cross_cut: i64,
}

impl<S> Edge<S> {
    pub fn other_end(&self, v: u32) -> u32 {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ToricGraph<S> {
    vertices: Vec<Vertex>,
    edges: Vec<Edge<S>>,
    curves: Option<CurvePair>,
}

impl<S: Scalar> ToricGraph<S> {
    /// Builds a graph, sorting vertices and edges by id. When `curves` is
    /// given, crossing counts are computed from the geometry; declared
    /// nonzero counts must then agree with the computed ones.
    pub fn new(mut vertices: Vec<Vertex>, mut edges: Vec<Edge<S>>, curves: Option<CurvePair>) -> Result<Self, TorusError> {
        vertices.sort_by_key(|v| v.id);
        edges.sort_by_key(|e| e.id);
        if let Some(w) = vertices.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(TorusError::DuplicateVertex(w[0].id));
        }
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(TorusError::DuplicateEdge(w[0].id));
        }
        let mut g = ToricGraph { vertices, edges, curves: None };
        for e in &g.edges {
            for v in [e.tail, e.head] {
                if g.vertex_index(v).is_none() {
                    return Err(TorusError::UnknownVertex(v));
                }
            }
        }
        if let Some(c) = curves {
            let declared: Vec<(i64, i64)> = g.edges.iter().map(|e| (e.cross_rim, e.cross_cut)).collect();
            g.set_curves(c)?;
            for (e, d) in g.edges.iter().zip(declared) {
                if d != (0, 0) && d != (e.cross_rim, e.cross_cut) {
                    return Err(TorusError::CrossingMismatch(e.id));
                }
            }
        }
        Ok(g)
    }

    /// Attaches a rim and cut and recomputes all crossing counts.
    pub fn set_curves(&mut self, c: CurvePair) -> Result<(), TorusError> {
        for i in 0..self.edges.len() {
            let (rim, cut) = self.curve_hits_of(i, &c)?;
            let e = &mut self.edges[i];
            e.cross_rim = rim.iter().map(|h| h.sign as i64).sum();
            e.cross_cut = -cut.iter().map(|h| h.sign as i64).sum::<i64>();
        }
        self.curves = Some(c);
        Ok(())
    }

    fn curve_hits_of(&self, i: usize, c: &CurvePair) -> Result<(Vec<CurveHit>, Vec<CurveHit>), TorusError> {
        let e = &self.edges[i];
        let p0 = self.vertex(e.tail).pos.clone();
        let p1 = &p0 + &e.lift;
        let rim = c.rim.hits(&p0, &p1).map_err(|_| TorusError::EdgeTouchesCurve { edge: e.id, curve: "rim" })?;
        let cut = c.cut.hits(&p0, &p1).map_err(|_| TorusError::EdgeTouchesCurve { edge: e.id, curve: "cut" })?;
        Ok((rim, cut))
    }

    /// Crossings of edge `id` with the rim, ordered along the edge.
    pub fn rim_hits(&self, id: u32) -> Result<Vec<CurveHit>, TorusError> {
        let c = self.curves.as_ref().ok_or(TorusError::MissingCurves)?;
        let i = self.edge_index(id).ok_or(TorusError::UnknownEdge(id))?;
        Ok(self.curve_hits_of(i, c)?.0)
    }

    /// Crossings of edge `id` with the rim and with the cut.
    pub fn edge_hits(&self, id: u32) -> Result<(Vec<CurveHit>, Vec<CurveHit>), TorusError> {
        let c = self.curves.as_ref().ok_or(TorusError::MissingCurves)?;
        let i = self.edge_index(id).ok_or(TorusError::UnknownEdge(id))?;
        self.curve_hits_of(i, c)
    }

    pub fn curves(&self) -> Option<&CurvePair> {
        self.curves.as_ref()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge<S>] {
        &self.edges
    }

    pub fn into_parts(self) -> (Vec<Vertex>, Vec<Edge<S>>, Option<CurvePair>) {
        (self.vertices, self.edges, self.curves)
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.vertices.binary_search_by_key(&id, |v| v.id).ok()
    }

    pub fn edge_index(&self, id: u32) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    /// Vertex by id. Panics on unknown ids, which the constructor excludes
    /// for edge endpoints.
    pub fn vertex(&self, id: u32) -> &Vertex {
        &self.vertices[self.vertex_index(id).expect("unknown vertex id")]
    }

    pub fn edge(&self, id: u32) -> &Edge<S> {
        &self.edges[self.edge_index(id).expect("unknown edge id")]
    }

    pub fn edge_mut(&mut self, id: u32) -> Option<&mut Edge<S>> {
        let i = self.edge_index(id)?;
        Some(&mut self.edges[i])
    }

    /// Indices (into `edges()`) of edges incident to vertex `id`.
    pub fn incident(&self, id: u32) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].tail == id || self.edges[i].head == id)
            .collect()
    }

    pub fn degree(&self, id: u32) -> usize {
        self.edges.iter().map(|e| (e.tail == id) as usize + (e.head == id) as usize).sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.edges.iter().all(|e| self.vertex(e.tail).color != self.vertex(e.head).color)
    }

    /// Vertex ids of the given color, ascending.
    pub fn ids_of_color(&self, c: Color) -> Vec<u32> {
        self.vertices.iter().filter(|v| v.color == c).map(|v| v.id).collect()
    }

    /// Crossing counts `(cut, rim)` of an edge of a bipartite graph taken
    /// in the white-to-black direction.
    pub fn wb_crossings(&self, e: &Edge<S>) -> (i64, i64) {
        if self.vertex(e.tail).color == Color::White {
            (e.cross_cut, e.cross_rim)
        } else {
            (-e.cross_cut, -e.cross_rim)
        }
    }

    /// Half-edge `2 i` runs along edge `i` from tail to head, `2 i + 1` back.
    pub fn half_origin(&self, h: usize) -> u32 {
        let e = &self.edges[h / 2];
        if h % 2 == 0 {
            e.tail
        } else {
            e.head
        }
    }

    pub fn half_dest(&self, h: usize) -> u32 {
        self.half_origin(h ^ 1)
    }

    pub fn half_direction(&self, h: usize) -> Point {
        let e = &self.edges[h / 2];
        if h % 2 == 0 {
            e.lift.clone()
        } else {
            -&e.lift
        }
    }

    /// Half-edges leaving vertex `id`, in counterclockwise angular order.
    pub fn rotation(&self, id: u32) -> Vec<usize> {
        let mut hs: Vec<usize> = (0..2 * self.edges.len()).filter(|&h| self.half_origin(h) == id).collect();
        hs.sort_by(|&a, &b| angle_cmp(&self.half_direction(a), &self.half_direction(b)).then(a.cmp(&b)));
        hs
    }

    /// Multiplies the weight of every edge at vertex `id` by `t`.
    pub fn gauge_transform(&self, id: u32, t: &S) -> Result<Self, TorusError> {
        if t.is_zero() {
            return Err(TorusError::ZeroScalar);
        }
        if self.vertex_index(id).is_none() {
            return Err(TorusError::UnknownVertex(id));
        }
        let mut g = self.clone();
        for e in &mut g.edges {
            if e.tail == id || e.head == id {
                e.weight = e.weight.clone() * t;
            }
        }
        Ok(g)
    }

    pub fn map_weights<T: Scalar>(&self, f: impl Fn(&Edge<S>) -> T) -> ToricGraph<T> {
        ToricGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    tail: e.tail,
                    head: e.head,
                    weight: f(e),
                    lift: e.lift.clone(),
                    cross_rim: e.cross_rim,
                    cross_cut: e.cross_cut,
                })
                .collect(),
            curves: self.curves.clone(),
        }
    }

    pub fn with_weights(&self, w: &[S]) -> Self {
        assert_eq!(w.len(), self.edges.len());
        let mut g = self.clone();
        for (e, x) in g.edges.iter_mut().zip(w) {
            e.weight = x.clone();
        }
        g
    }

    pub fn weights(&self) -> Vec<S> {
        self.edges.iter().map(|e| e.weight.clone()).collect()
    }

    pub fn without_curves(&self) -> Self {
        let mut g = self.clone();
        g.curves = None;
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::torus::curves::Curve;

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::from_ratios(xn, xd, yn, yd)
    }

    fn theta() -> ToricGraph<Cyclo8> {
        let vertices = vec![
            Vertex { id: 0, color: Color::White, pos: pt(1, 4, 1, 4) },
            Vertex { id: 1, color: Color::Black, pos: pt(1, 2, 1, 2) },
        ];
        let lifts = [pt(1, 4, 1, 4), pt(-3, 4, 1, 4), pt(1, 4, -3, 4)];
        let edges = lifts
            .into_iter()
            .enumerate()
            .map(|(i, lift)| Edge {
                id: i as u32,
                tail: 0,
                head: 1,
                weight: Cyclo8::from_int(i as i64 + 1),
                lift,
                cross_rim: 0,
                cross_cut: 0,
            })
            .collect();
        let rim = Curve::new(vec![pt(0, 1, 1, 8), pt(0, 1, 9, 8)]).unwrap();
        let cut = Curve::new(vec![pt(1, 8, 0, 1), pt(9, 8, 0, 1)]).unwrap();
        ToricGraph::new(vertices, edges, Some(CurvePair { rim, cut })).unwrap()
    }

    #[test]
    fn crossings_of_theta() {
        let g = theta();
        let c: Vec<_> = g.edges().iter().map(|e| (e.cross_rim, e.cross_cut)).collect();
        // edge 1 goes left through x = 0, edge 2 goes down through y = 0
        assert_eq!(c, vec![(0, 0), (-1, 0), (0, -1)]);
        assert_eq!(g.wb_crossings(g.edge(1)), (0, -1));
    }

    #[test]
    fn rotation_order() {
        let g = theta();
        // at the white vertex: (1,1) at 45 deg, (-3,1), (1,-3)
        assert_eq!(g.rotation(0), vec![0, 2, 4]);
        assert_eq!(g.rotation(1), vec![5, 1, 3]);
    }

    #[test]
    fn gauge() {
        let g = theta();
        let t = Cyclo8::from_int(2);
        let h = g.gauge_transform(1, &t).unwrap();
        assert_eq!(h.weights(), vec![Cyclo8::from_int(2), Cyclo8::from_int(4), Cyclo8::from_int(6)]);
        let back = h.gauge_transform(1, &t.inv().unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.gauge_transform(1, &Cyclo8::from_int(1)).unwrap(), g);
        assert_eq!(g.gauge_transform(0, &Cyclo8::from_int(0)), Err(TorusError::ZeroScalar));
        assert_eq!(g.gauge_transform(7, &t), Err(TorusError::UnknownVertex(7)));
    }
}
