//! Exact finite-dimensional Hopf algebras, Drinfeld doubles, and the
//! bead-calculus invariants of closed 3-manifolds built from them.

#![no_std]

extern crate alloc;

pub mod chromatic;
mod contract;
pub mod double;
mod error;
pub mod hkr;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod scalar;
pub mod zoo;

pub use error::{Error, Result};
pub use hopf::{AxiomReport, Element, Functional, HopfAlgebra, HopfData, Tensor};
pub use scalar::{Field, Rational, Scalar};
