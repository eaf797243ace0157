//! The network obtained by cutting the torus open along the rim.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LaurentPoly2, PolyMatrix, Scalar};
use crate::network::PerfectNetwork;
use crate::torus::geometry::Q;

use super::MeasurementError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Source(usize),
    Sink(usize),
    Internal(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CylEdge<S> {
    pub from: Node,
    pub to: Node,
    /// `lambda`-twisted weight; never involves `mu`.
    pub weight: LaurentPoly2<S>,
    /// Id of the torus edge this fragment comes from.
    pub origin: Option<u32>,
}

/// Sources and sinks with equal index are glued back together on the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct CylinderNetwork<S> {
    /// Torus vertex id of each internal vertex, `None` for inserted ones.
    pub internal: Vec<Option<u32>>,
    pub sources: usize,
    pub edges: Vec<CylEdge<S>>,
}

impl<S: Scalar> CylinderNetwork<S> {
    pub fn new(internal: Vec<Option<u32>>, sources: usize, edges: Vec<CylEdge<S>>) -> Result<Self, MeasurementError> {
        let bad = |m: String| Err(MeasurementError::Malformed(m));
        let m = internal.len();
        let mut out_src = vec![0usize; sources];
        let mut in_sink = vec![0usize; sources];
        for (k, e) in edges.iter().enumerate() {
            if !e.weight.is_mu_free() {
                return bad(format!("edge {k} has a mu-dependent weight"));
            }
            match (e.from, e.to) {
                (Node::Source(_), Node::Sink(_)) => return bad(format!("edge {k} joins a source to a sink")),
                (Node::Sink(_), _) => return bad(format!("edge {k} leaves a sink")),
                (_, Node::Source(_)) => return bad(format!("edge {k} enters a source")),
                _ => {}
            }
            for v in [e.from, e.to] {
                let ok = match v {
                    Node::Source(i) | Node::Sink(i) => i < sources,
                    Node::Internal(i) => i < m,
                };
                if !ok {
                    return bad(format!("edge {k} refers to a missing vertex {v:?}"));
                }
            }
            if let Node::Source(i) = e.from {
                out_src[i] += 1;
            }
            if let Node::Sink(i) = e.to {
                in_sink[i] += 1;
            }
        }
        if let Some(i) = out_src.iter().position(|&c| c != 1) {
            return bad(format!("source {i} has {} edges", out_src[i]));
        }
        if let Some(i) = in_sink.iter().position(|&c| c != 1) {
            return bad(format!("sink {i} has {} edges", in_sink[i]));
        }
        Ok(CylinderNetwork { internal, sources, edges })
    }

    pub fn num_internal(&self) -> usize {
        self.internal.len()
    }

    /// Sources by internal vertices.
    pub fn x(&self) -> PolyMatrix<S> {
        let mut x = PolyMatrix::zeros(self.sources, self.num_internal());
        for e in &self.edges {
            if let (Node::Source(s), Node::Internal(j)) = (e.from, e.to) {
                x.accumulate(s, j, &e.weight);
            }
        }
        x
    }

    /// Internal vertices by sinks.
    pub fn y(&self) -> PolyMatrix<S> {
        let mut y = PolyMatrix::zeros(self.num_internal(), self.sources);
        for e in &self.edges {
            if let (Node::Internal(i), Node::Sink(s)) = (e.from, e.to) {
                y.accumulate(i, s, &e.weight);
            }
        }
        y
    }

    /// Weighted adjacency among internal vertices.
    pub fn a_hat(&self) -> PolyMatrix<S> {
        let m = self.num_internal();
        let mut a = PolyMatrix::zeros(m, m);
        for e in &self.edges {
            if let (Node::Internal(i), Node::Internal(j)) = (e.from, e.to) {
                a.accumulate(i, j, &e.weight);
            }
        }
        a
    }

    /// Adjacency after gluing each sink to its source with an extra `mu`.
    pub fn a_bar(&self) -> PolyMatrix<S> {
        let glue = self.y().mul(&self.x()).scale(&LaurentPoly2::mu());
        self.a_hat().add(&glue)
    }
}

/// Cuts along the rim. Every rim crossing of an edge becomes a sink (the
/// part before the crossing) and a source (the part after); both carry the
/// index of the crossing in the order of the rim. The first fragment keeps
/// the weight, later ones get 1, and every fragment is twisted by the cut
/// crossings it contains. A fragment running from one rim crossing to the
/// next gets an inserted 2-valent vertex.
pub fn cut_to_cylinder<S: Scalar>(n: &PerfectNetwork<S>) -> Result<CylinderNetwork<S>, MeasurementError> {
    let g = &n.graph;
    if g.curves().is_none() {
        return Err(MeasurementError::MissingCurves);
    }
    let mut hits = Vec::with_capacity(g.edges().len());
    let mut on_rim = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (rim, cut) = g.edge_hits(e.id)?;
        if rim.iter().any(|h| h.sign < 0) {
            return Err(MeasurementError::NotIdeal(e.id));
        }
        for (k, h) in rim.iter().enumerate() {
            on_rim.push((i, k, h.clone()));
        }
        hits.push((rim, cut));
    }
    on_rim.sort_by(|a, b| a.2.position_cmp(&b.2));
    let index_of = |i: usize, k: usize| on_rim.iter().position(|r| r.0 == i && r.1 == k).unwrap();

    let mut internal: Vec<Option<u32>> = g.vertices().iter().map(|v| Some(v.id)).collect();
    let vix = |id: u32| g.vertex_index(id).unwrap();
    let mut edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (rim, cut) = &hits[i];
        let r = rim.len();
        let zero = Q::from_integer(0.into());
        let one = Q::from_integer(1.into());
        for k in 0..=r {
            let lo = if k == 0 { &zero } else { &rim[k - 1].t };
            let hi = if k == r { &one } else { &rim[k].t };
            let twist: i64 = -cut.iter().filter(|h| &h.t > lo && &h.t < hi).map(|h| h.sign as i64).sum::<i64>();
            let from = if k == 0 { Node::Internal(vix(e.tail)) } else { Node::Source(index_of(i, k - 1)) };
            let to = if k == r { Node::Internal(vix(e.head)) } else { Node::Sink(index_of(i, k)) };
            let w = if k == 0 { e.weight.clone() } else { S::one() };
            let weight = LaurentPoly2::monomial(w, twist, 0);
            if let (Node::Source(_), Node::Sink(_)) = (from, to) {
                let mid = Node::Internal(internal.len());
                internal.push(None);
                edges.push(CylEdge { from, to: mid, weight, origin: Some(e.id) });
                edges.push(CylEdge { from: mid, to, weight: LaurentPoly2::one(), origin: Some(e.id) });
            } else {
                edges.push(CylEdge { from, to, weight, origin: Some(e.id) });
            }
        }
    }
    CylinderNetwork::new(internal, on_rim.len(), edges)
}

/// Random network with `n` sources and `m` internal vertices. Each ordered
/// pair of distinct internal vertices is joined with probability `density`;
/// weights come from `weight` and are twisted by `lambda^{-1, 0, 1}`.
pub fn random_cylinder<S: Scalar>(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    density: f64,
    mut weight: impl FnMut(&mut ChaCha8Rng) -> S,
) -> CylinderNetwork<S> {
    assert!(m > 0 || n == 0, "sources need internal vertices");
    let mut edges = Vec::new();
    let mut twisted = |rng: &mut ChaCha8Rng| {
        let w = weight(rng);
        LaurentPoly2::monomial(w, rng.gen_range(-1..=1), 0)
    };
    for s in 0..n {
        let j = rng.gen_range(0..m);
        edges.push(CylEdge { from: Node::Source(s), to: Node::Internal(j), weight: twisted(rng), origin: None });
    }
    for i in 0..m {
        for j in 0..m {
            if i != j && rng.gen_bool(density) {
                edges.push(CylEdge { from: Node::Internal(i), to: Node::Internal(j), weight: twisted(rng), origin: None });
            }
        }
    }
    for s in 0..n {
        let i = rng.gen_range(0..m);
        edges.push(CylEdge { from: Node::Internal(i), to: Node::Sink(s), weight: twisted(rng), origin: None });
    }
    CylinderNetwork::new(vec![None; m], n, edges).expect("generated network is well formed")
}
