//! Initial ideals, Groebner fans and state polytopes of Specht ideals.
//!
//! For a partition `lambda` of `n` with at least two rows, the Specht ideal
//! `I_lambda` has exactly `n!/(k+1)!` distinct initial ideals, where `k` is
//! the smallest gap between consecutive parts, and its state polytope is the
//! generalized permutohedron obtained by permuting
//! `(1, 2, ..., n-k-1, n-k, ..., n-k)`. This crate computes both sides
//! exactly and checks them against each other and against an independent
//! Buchberger criterion.

pub mod combinatorics;
pub mod error;
pub mod fan;
pub mod oracle;
pub mod polyring;
pub mod polytope;
pub mod specht;
pub mod verify;

pub use combinatorics::{Partition, Tableau, VariableOrder};
pub use error::{Error, Result};
pub use polyring::{Monomial, Polynomial, WeightVector};
pub use specht::MonomialIdeal;
