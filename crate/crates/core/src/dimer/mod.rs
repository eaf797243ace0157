//! Dimer covers, Kasteleyn markings and the characteristic polynomial.

pub mod covers;
pub mod gf2;
pub mod kasteleyn;
pub mod marking;

pub use covers::{enumerate_covers, hamiltonians, DimerCover, HamiltonianTable};
pub use gf2::Gf2System;
pub use kasteleyn::{char_poly, kasteleyn_check, kasteleyn_matrix, KasteleynCheck};
pub use marking::{
    alternating_product, check_cycles, check_faces, find_kasteleyn_marking, fundamental_cycles, spin_variants,
    walk_class, CycleCheck, FaceCheck, Marking,
};

use crate::algebra::AlgebraError;
use crate::torus::TorusError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DimerError {
    #[error("{white} white but {black} black vertices")]
    ColorCountMismatch { white: usize, black: usize },
    #[error("graph has no dimer cover")]
    NoPerfectMatching,
    #[error("face parity system has no solution")]
    NoKasteleynSolution,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("marking has {found} values for {edges} edges")]
    MarkingLength { found: usize, edges: usize },
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Torus(#[from] TorusError),
}
