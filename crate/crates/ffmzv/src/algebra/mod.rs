//! Exact arithmetic over F_q: polynomials, rational functions, truncated
//! Laurent series at infinity, rational reconstruction and linear algebra.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod reconstruct;
pub mod residue;
pub mod series;

pub use field::{FieldElem, Fq};
pub use linalg::{linear_solve, Field, Matrix, Solution};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use reconstruct::{rational_reconstruct, DEFAULT_GUARD};
pub use residue::{Residue, ResidueField};
pub use series::LaurentSeries;
