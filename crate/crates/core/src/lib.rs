//! Exact-arithmetic toolkit for reductive complements of subalgebras in small
//! real Lie algebras, closed-form exponentials and the loops built from
//! sharply transitive sections.

pub mod algebra;
pub mod error;
pub mod expr;
pub mod field;
pub mod linalg;

pub use error::{Error, Result};
pub mod catalog;
pub mod solver;
pub mod expm;
pub mod loops;
pub mod report;
