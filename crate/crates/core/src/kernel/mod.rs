//! Exact scalars over `Q` and `F_p`, and dense linear algebra on top of them.

mod field;
mod matrix;

pub use field::{field_inv, Field, Scalar};
pub use matrix::{mat_inverse, mat_kernel, mat_solve, Matrix, Vector};
