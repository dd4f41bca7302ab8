//! Interpolation Macdonald polynomials, their dual functions, and exact
//! verification of the associated Cauchy identities over Q(q,t).

pub mod algebra;
pub mod dual;
pub mod error;
pub mod interp;
pub mod macdonald;
pub mod operators;
pub mod partitions;
pub mod suites;

pub use error::{AlgebraError, Result};
