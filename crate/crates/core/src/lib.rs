//! Exact computations for the subexceptional series of prehomogeneous
//! representations `(C3, ω3)`, `(A5, ω3)`, `(D6, ω5)` and `(E7, ω6)`,
//! indexed by `m ∈ {1, 2, 4, 8}`.

pub mod bott;
pub mod charseries;
pub mod error;
pub mod geometry;
pub mod liealg;
pub mod quiver;
pub mod rational;
pub mod subexc;

pub use error::{Error, Result};
