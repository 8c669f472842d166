//! Exact finite-dimensional Hopf algebras given by structure constants, Hopf braces,
//! matched pairs and their bicrossed products, braid operators from cocommutative
//! braces, and equalizers and products of braces.

pub mod actions;
pub mod brace;
pub mod braid;
pub mod catlim;
pub mod constructions;
pub mod error;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod sweedler;
pub mod tensor;
pub mod zoo;

pub use actions::{ActionKind, LinearAction, MatchedPair, Side, SideCondition};
pub use brace::HopfBraceData;
pub use error::{Error, Result};
pub use hopf::{CoalgebraData, HopfAlgebraData};
pub use linalg::SparseMatrix;
pub use report::{AxiomCheck, AxiomReport, Witness};
pub use scalar::{Field, Scalar};
