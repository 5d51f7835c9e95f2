//! Hermitian hulls of linear codes over GF(q^2).
//!
//! The crate builds generalized Reed-Solomon and genus-zero algebraic
//! geometry codes whose Hermitian hulls are (or contain) MDS codes, checks
//! every claimed hull property by exact linear algebra, and turns the
//! results into parameters of entanglement-assisted quantum codes.

pub mod arith;
pub mod error;
pub mod gf;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub mod code;
pub mod cyclic;
pub mod linalg;
pub mod parallel;
pub mod poly;

pub use code::{LinearCode, DEFAULT_BUDGET};
pub use linalg::Matrix;
pub mod ag;
pub mod grs;
pub mod quantum;
pub mod cli;
pub mod report;
