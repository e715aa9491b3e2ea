//! Exact arithmetic: prime fields, `ℚ(√q)`, Laurent polynomials, and
//! noncommutative polynomials with 2×2 matrices over them, dense matrices.

pub mod field;
pub mod laurent;
pub mod mat2;
pub mod matrix;
pub mod ncpoly;
pub mod qsqrt;
pub mod word;

pub use field::{Field, FieldElem};
pub use laurent::{qsqrt_eval, LaurentPoly};
pub use mat2::{ring_hom_apply, Mat2};
pub use matrix::Matrix;
pub use ncpoly::{nc_mul, NcPoly};
pub use qsqrt::QSqrt;
pub use word::{Letter, Word};
