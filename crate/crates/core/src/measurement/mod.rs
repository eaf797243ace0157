//! Networks on the cylinder, boundary path matrices and their
//! characteristic polynomials.

pub mod adjacency;
pub mod cylinder;
pub mod paths;

use serde_json::Value;
use thiserror::Error;

use crate::algebra::{AlgebraError, RatFn2, Scalar};
use crate::network::NetworkError;
use crate::torus::TorusError;

pub use adjacency::{adjacency_matrix, bipartite_adjacency, BipartiteAdjacency};
pub use cylinder::{cut_to_cylinder, random_cylinder, CylEdge, CylinderNetwork, Node};
pub use paths::{
    boundary_measurement_matrix, boundary_path_matrix, charpoly_boundary, charpoly_checked, enumerate_paths, series_at, torus_ratio,
    turn_weighted, Method,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasurementError {
    #[error("the network has no rim and cut")]
    MissingCurves,
    #[error("edge {0} crosses the rim negatively")]
    NotIdeal(u32),
    #[error("det(I - A) vanishes identically")]
    SingularPathSystem,
    #[error("direct and ratio methods disagree: {0}")]
    MethodMismatch(String),
    #[error("cannot relabel: {0}")]
    RelabelingImpossible(String),
    #[error("the network has a directed cycle")]
    Cyclic,
    #[error("malformed cylinder network: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// Square matrix of rational functions in `lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryMatrix<S> {
    pub entries: Vec<Vec<RatFn2<S>>>,
}

impl<S: Scalar> BoundaryMatrix<S> {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFn2<S> {
        &self.entries[i][j]
    }

    /// `lambda -> -lambda` on every entry.
    pub fn flip_lambda(&self) -> Self {
        self.map(|r| r.substitute_signs(-1, 1))
    }

    pub fn map(&self, f: impl Fn(&RatFn2<S>) -> RatFn2<S>) -> Self {
        BoundaryMatrix { entries: self.entries.iter().map(|row| row.iter().map(&f).collect()).collect() }
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        self.size() == o.size()
            && self.entries.iter().zip(&o.entries).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.approx_eq(y, tol)))
    }

    pub fn evaluate(&self, lambda: &S) -> Result<Vec<Vec<S>>, AlgebraError> {
        let zero = S::zero();
        self.entries.iter().map(|row| row.iter().map(|r| r.evaluate(lambda, &zero)).collect()).collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter().map(|r| serde_json::json!({ "num": r.num.to_string(), "den": r.den.to_string() })).collect(),
                )
            })
            .collect();
        Value::Array(rows)
    }
}
