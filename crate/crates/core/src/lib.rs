//! Exact higher and relative Hochschild homology.
//!
//! The crate computes homology of relative Loday constructions on finite
//! pointed simplicial pairs by brute force, and independently evaluates
//! closed-form iterated Tor towers over free graded-commutative algebras,
//! so that the two can be cross-checked.

pub mod algebra;
pub mod cli;
pub mod exact;
pub mod gca;
pub mod loday;
pub mod simplicial;
pub mod verify;
