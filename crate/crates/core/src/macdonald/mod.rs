//! Homogeneous Macdonald layer: b-factors, branching coefficients, P and Q,
//! the (q,t) scalar product and an independent orthogonalization oracle.

pub mod branching;
pub mod poly;
pub mod symfunc;

pub use branching::{b_factor, b_partition, phi, psi, psi_chain};
pub use poly::{chain_weights, macdonald_p, macdonald_q, monomial_symmetric};
pub use symfunc::{gram_schmidt_oracle, power_sum_norm, scalar_product, Basis, SymFunc};
