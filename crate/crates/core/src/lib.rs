//! Heisenberg-invariant Jacobian Poisson structures.
//!
//! Exact polynomial arithmetic over the rationals, Jacobian brackets built
//! from Casimir sets, invariance checks under the finite Heisenberg group, and
//! the lattice-point enumeration that classifies the invariant Casimirs.

pub mod classify;
pub mod cli;
pub mod dualcurve;
pub mod enumeration;
pub mod error;
pub mod heisenberg;
pub mod jps;
pub mod plot;
pub mod polyring;

pub use error::{Error, Result};
