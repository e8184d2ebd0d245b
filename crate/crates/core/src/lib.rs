//! Computational workbench for strict polynomial functors over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: Young diagrams, p-cores and block classification.
//! * [`symchar`]: dimension and graded-dimension formulas (Schur functors,
//!   Littlewood–Richardson coefficients, block and corner algebra dimensions).
//! * [`primefield`]: exact dense linear algebra over `F_p`.
//! * [`schur`]: Schur algebras `S(n, d)` with Weyl and simple modules.
//! * [`homalg`]: radicals, projective indecomposables, minimal resolutions
//!   and Ext tables.
//! * [`wreath`]: the graded algebras `A_i`, wreath products and corner algebras.
//! * [`verify`]: the end-to-end experiments that produce JSON reports.
//!
//! Data-parallel loops go through [`exec`], which uses rayon when the
//! `parallel` feature is enabled and falls back to plain iteration otherwise.

pub mod error;
pub mod exec;
pub mod homalg;
pub mod partitions;
pub mod primefield;
pub mod schur;
pub mod symchar;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use primefield::PFMatrix;
pub use symchar::{GradedAlphabet, GradedDim};
