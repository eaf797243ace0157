//! Embedded graphs on the flat torus.

pub mod curves;
pub mod faces;
pub mod geometry;
pub mod graph;
pub mod validate;

pub use curves::{Curve, CurveHit, CurvePair};
pub use faces::{compute_faces, Face};
pub use geometry::Point;
pub use graph::{Color, Edge, ToricGraph, Vertex};
pub use validate::{validate_bipartite, validate_graph, ValidationReport, Violation, ViolationCode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(u32),
    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),
    #[error("unknown edge id {0}")]
    UnknownEdge(u32),
    #[error("invalid curve: {0}")]
    BadCurve(String),
    #[error("non-transversal meeting with curve segment {segment}")]
    NonTransversal { segment: usize },
    #[error("edge {edge} meets the {curve} non-transversally")]
    EdgeTouchesCurve { edge: u32, curve: &'static str },
    #[error("declared crossing counts of edge {0} disagree with the geometry")]
    CrossingMismatch(u32),
    #[error("no rim and cut given")]
    MissingCurves,
    #[error("two edges leave vertex {0} in the same direction")]
    DegenerateAngles(u32),
    #[error("gauge factor must be nonzero")]
    ZeroScalar,
}
