pub mod algebra;
pub mod dimer;
pub mod instances;
pub mod io;
pub mod measurement;
pub mod network;
pub mod torus;
pub mod verify;

pub use algebra::{Approx, Cyclo8, LaurentPoly2, PolyMatrix, RatFn2, Scalar};

pub type ExactPoly = LaurentPoly2<Cyclo8>;
pub type FloatPoly = LaurentPoly2<Approx>;
