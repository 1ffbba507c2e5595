//! Exact scalar fields and dense linear algebra over them.

mod field;
mod form;
mod matrix;

pub use field::{is_prime, rational_to_string, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use form::LinearForm;
pub use matrix::{
    dot, image_basis, kernel_basis, quotient_dim, rank, rref, solve, ColumnCoordinates,
    EchelonBasis, Matrix,
};
