//! Exact computations with finite-dimensional hom-Jordan-Lie algebras.
//!
//! Everything is over the rationals and every identity is checked on basis
//! tuples, so verdicts are exact. Algebras are given by structure constants;
//! linear maps are matrices acting on coordinate columns.

pub mod algebra;
pub mod deformations;
pub mod derivations;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod quadratic;
pub mod representations;

pub use algebra::{HjlAlgebra, Sign};
pub use error::{Error, Result, Verdict, Witness};
pub use linalg::{Matrix, Rational, Subspace, Tensor3};
