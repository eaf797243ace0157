//! Equivalence moves on perfect networks, recorded as JSON transcripts.

use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::torus::{Color, ToricGraph};

use super::bipartite::split_edge;
use super::perfect::PerfectNetwork;
use super::NetworkError;

/// `{"move": "insert", "args": {"edge": 3, "color": "white"}}` and so on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "move", content = "args", rename_all = "snake_case")]
pub enum Move {
    /// Split an edge by a 2-valent vertex (at its midpoint when that avoids the rim and cut).
    Insert { edge: u32, color: crate::io::ColorName },
    /// Contract an edge whose endpoints have the same color.
    Contract { edge: u32 },
    /// Reverse a directed cycle, inverting its weights.
    Reverse { edges: Vec<u32> },
}

impl Move {
    pub fn apply<S: Scalar>(&self, n: &PerfectNetwork<S>) -> Result<PerfectNetwork<S>, NetworkError> {
        match self {
            Move::Insert { edge, color } => {
                let c = match color {
                    crate::io::ColorName::Black => Color::Black,
                    crate::io::ColorName::White => Color::White,
                };
                Ok(PerfectNetwork::new(split_edge(&n.graph, *edge, c)?.0))
            }
            Move::Contract { edge } => contract(n, *edge),
            Move::Reverse { edges } => reverse_cycle(n, edges),
        }
    }
}

pub fn apply_moves<S: Scalar>(n: &PerfectNetwork<S>, moves: &[Move]) -> Result<PerfectNetwork<S>, NetworkError> {
    moves.iter().try_fold(n.clone(), |acc, m| m.apply(&acc))
}

/// Merges the head into the tail. The contracted weight moves onto the
/// outgoing edges of a white head or the incoming edges of a black tail, so
/// every path keeps its weight.
fn contract<S: Scalar>(n: &PerfectNetwork<S>, id: u32) -> Result<PerfectNetwork<S>, NetworkError> {
    let g = &n.graph;
    let e = g.edge_index(id).map(|i| g.edges()[i].clone()).ok_or(NetworkError::UnknownEdge(id))?;
    let (u, v) = (e.tail, e.head);
    if u == v {
        return Err(NetworkError::IsLoop(id));
    }
    let color = g.vertex(u).color;
    if color != g.vertex(v).color {
        return Err(NetworkError::NotUnicolored(id));
    }
    let (vertices, edges, curves) = g.clone().into_parts();
    let has_curves = curves.is_some();
    let vertices = vertices.into_iter().filter(|x| x.id != v).collect();
    let mut out = Vec::new();
    for mut x in edges.into_iter().filter(|x| x.id != id) {
        let rescale = match color {
            Color::White => x.tail == v,
            Color::Black => x.head == u,
        };
        if rescale {
            x.weight = x.weight * &e.weight;
        }
        if x.tail == v {
            x.tail = u;
            x.lift = &x.lift + &e.lift;
            x.cross_rim += e.cross_rim;
            x.cross_cut += e.cross_cut;
        }
        if x.head == v {
            x.head = u;
            x.lift = &x.lift - &e.lift;
            x.cross_rim -= e.cross_rim;
            x.cross_cut -= e.cross_cut;
        }
        if has_curves {
            x.cross_rim = 0;
            x.cross_cut = 0;
        }
        out.push(x);
    }
    Ok(PerfectNetwork::new(ToricGraph::new(vertices, out, curves)?))
}

fn reverse_cycle<S: Scalar>(n: &PerfectNetwork<S>, ids: &[u32]) -> Result<PerfectNetwork<S>, NetworkError> {
    let g = &n.graph;
    if ids.is_empty() {
        return Err(NetworkError::NotADirectedCycle);
    }
    for (k, id) in ids.iter().enumerate() {
        let a = g.edge_index(*id).ok_or(NetworkError::UnknownEdge(*id))?;
        let next = ids[(k + 1) % ids.len()];
        let b = g.edge_index(next).ok_or(NetworkError::UnknownEdge(next))?;
        if g.edges()[a].head != g.edges()[b].tail {
            return Err(NetworkError::NotADirectedCycle);
        }
    }
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ids.len() {
        return Err(NetworkError::NotADirectedCycle);
    }
    let (vertices, mut edges, curves) = g.clone().into_parts();
    for x in edges.iter_mut().filter(|x| ids.contains(&x.id)) {
        std::mem::swap(&mut x.tail, &mut x.head);
        x.lift = -&x.lift;
        x.weight = x.weight.inv()?;
        x.cross_rim = -x.cross_rim;
        x.cross_cut = -x.cross_cut;
    }
    Ok(PerfectNetwork::new(ToricGraph::new(vertices, edges, curves)?))
}
