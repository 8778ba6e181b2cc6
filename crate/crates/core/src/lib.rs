//! Exact-arithmetic engine for cluster algebras of geometric type.
//!
//! The crate mutates seeds of geometric type, runs the knitting algorithm
//! along acyclic belts, generates and enumerates frieze patterns with
//! arbitrary coefficients, tests frieze points in the BFZ / principal /
//! trivial coefficient regimes, and constructs Property-F morphisms
//! (freezing, deletion, quasi-homomorphisms, universal coefficient
//! specialization). All arithmetic is exact: cluster variables are sparse
//! Laurent polynomials over arbitrary-precision integers.

// index-parallel loops over several arrays read better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod belt;
pub mod cartan;
pub mod context;
pub mod coxeter;
pub mod error;
pub mod frieze;
pub mod matrix;
pub mod morph;
pub mod poly;
pub mod seed;

pub use context::{Alphabet, Ctx};
pub use error::{Error, Result};
pub use matrix::{ExtMatrix, IntMat};
pub use poly::{ExpVec, LaurentPoly, TropicalVector};
pub use seed::Seed;
