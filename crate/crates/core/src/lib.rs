//! Simplicial complexes, their face rings over exact fields, and the
//! homological invariants that control generic Artinian reductions of
//! pseudomanifolds with isolated singularities.

pub mod linalg;

pub mod analysis;
pub mod classify;
pub mod complex;
pub mod data;
pub mod error;
pub mod face_ring;
pub mod formulas;
pub mod homology;
pub mod pl;
pub mod report;

pub use complex::{Face, FVector, GVector, HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::FieldSpec;
