//! Structure of minimal W-algebras: root data, exact matrix realizations,
//! λ-bracket normalization, level classification, collapse chains and a
//! free-field realization check.

pub mod exactmath;
pub mod levels;
pub mod matrixalg;
pub mod realize;
pub mod rootcat;
pub mod wstruct;
