//! Perfect networks on the torus.

pub mod bipartite;
pub mod moves;
pub mod perfect;
pub mod turning;

pub use bipartite::{bipartite_double, psi_map, Doubling};
pub use moves::{apply_moves, Move};
pub use perfect::{preprocessing_report, validate_network, validate_rim_cut, PerfectNetwork};
pub use turning::{fractional_marking, switch_counts, turning_numbers, verify_marking, MarkingReport, SwitchCount, TurningData, TurningEntry};

use crate::algebra::AlgebraError;
use crate::torus::TorusError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NetworkError {
    #[error("edge {0} does not join two vertices of the same color")]
    NotUnicolored(u32),
    #[error("edge {0} is a loop")]
    IsLoop(u32),
    #[error("edges do not form a directed cycle")]
    NotADirectedCycle,
    #[error("straight angle at edge {0}")]
    StraightAngle(u32),
    #[error("black-to-white edge {0} has zero weight")]
    ZeroWeightOnCoverEdge(u32),
    #[error("network is not perfect: {0}")]
    NotPerfect(String),
    #[error("network is not bipartite")]
    NotBipartite,
    #[error("unknown edge {0}")]
    UnknownEdge(u32),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Torus(#[from] TorusError),
}
