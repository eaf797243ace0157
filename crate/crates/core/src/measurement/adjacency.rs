//! Weighted adjacency matrices of a network on the torus.

use crate::algebra::{LaurentPoly2, PolyMatrix, Scalar};
use crate::network::{PerfectNetwork, TurningData};
use crate::torus::{Color, Edge, ToricGraph};

use super::MeasurementError;

/// `wt(e) lambda^{cross_cut} mu^{cross_rim}`.
pub(crate) fn twisted<S: Scalar>(e: &Edge<S>) -> LaurentPoly2<S> {
    LaurentPoly2::monomial(e.weight.clone(), e.cross_cut, e.cross_rim)
}

/// Rows and columns are vertices in id order; entry `(tail, head)`.
pub fn adjacency_matrix<S: Scalar>(g: &ToricGraph<S>) -> PolyMatrix<S> {
    let n = g.vertices().len();
    let mut a = PolyMatrix::zeros(n, n);
    for e in g.edges() {
        let (i, j) = (g.vertex_index(e.tail).unwrap(), g.vertex_index(e.head).unwrap());
        a.accumulate(i, j, &twisted(e));
    }
    a
}

/// Split of the adjacency matrix of a bipartite network. Black vertex `i`
/// is paired with white vertex `i`, the head of its unique outgoing edge.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteAdjacency<S> {
    pub blacks: Vec<u32>,
    pub whites: Vec<u32>,
    /// Black by white; diagonal.
    pub bw: PolyMatrix<S>,
    /// White by black.
    pub wb: PolyMatrix<S>,
}

impl<S: Scalar> BipartiteAdjacency<S> {
    /// `det(I - bw * wb)`.
    pub fn p(&self) -> Result<LaurentPoly2<S>, MeasurementError> {
        let n = self.blacks.len();
        Ok(PolyMatrix::identity(n).sub(&self.bw.mul(&self.wb)).det()?)
    }
}

/// With `turns`, white-to-black entries are multiplied by turning numbers.
pub fn bipartite_adjacency<S: Scalar>(
    n: &PerfectNetwork<S>,
    turns: Option<&TurningData<S>>,
) -> Result<BipartiteAdjacency<S>, MeasurementError> {
    let g = &n.graph;
    let blacks = g.ids_of_color(Color::Black);
    let mut whites = Vec::with_capacity(blacks.len());
    let mut bw_entries = Vec::with_capacity(blacks.len());
    for &b in &blacks {
        let out = n.outgoing(b);
        let [k] = out.as_slice() else {
            return Err(MeasurementError::RelabelingImpossible(format!("black vertex {b} has {} outgoing edges", out.len())));
        };
        let e = &g.edges()[*k];
        if g.vertex(e.head).color != Color::White {
            return Err(MeasurementError::RelabelingImpossible(format!("edge {} joins two black vertices", e.id)));
        }
        if whites.contains(&e.head) {
            return Err(MeasurementError::RelabelingImpossible(format!("white vertex {} has two incoming edges", e.head)));
        }
        whites.push(e.head);
        bw_entries.push(twisted(e));
    }
    if whites.len() != g.ids_of_color(Color::White).len() {
        return Err(MeasurementError::RelabelingImpossible("unequal numbers of black and white vertices".into()));
    }
    let size = blacks.len();
    let mut bw = PolyMatrix::zeros(size, size);
    for (i, w) in bw_entries.into_iter().enumerate() {
        bw.set(i, i, w);
    }
    let mut wb = PolyMatrix::zeros(size, size);
    for (k, e) in g.edges().iter().enumerate() {
        if !n.is_white_to_black(k) {
            if !n.is_black_to_white(k) {
                return Err(MeasurementError::RelabelingImpossible(format!("edge {} is unicolored", e.id)));
            }
            continue;
        }
        let i = whites.iter().position(|&w| w == e.tail).unwrap();
        let j = blacks.iter().position(|&b| b == e.head).unwrap();
        let mut w = twisted(e);
        if let Some(t) = turns {
            w = w.scale(t.turn_of(e.id).expect("turning number for every white-to-black edge"));
        }
        wb.accumulate(i, j, &w);
    }
    Ok(BipartiteAdjacency { blacks, whites, bw, wb })
}
