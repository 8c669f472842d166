use thiserror::Error;

use crate::report::AxiomReport;
use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("shape mismatch in {what}: expected {expected}, found {found}")]
    Shape {
        what: String,
        expected: String,
        found: String,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A hypothesis of a construction failed; the embedded report carries the witness.
    #[error("hypothesis `{name}` failed: {report}")]
    Hypothesis {
        name: String,
        report: Box<AxiomReport>,
    },

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("{0} is not cocommutative")]
    NotCocommutative(String),

    #[error("{0} is not commutative")]
    NotCommutative(String),

    #[error("S^2 != Id: S^2(e_{index}) differs from e_{index}")]
    AntipodeNotInvolutive { index: usize },

    #[error("no antipode exists for {0}")]
    NoAntipode(String),

    #[error("unknown {kind} `{id}`")]
    Unknown { kind: &'static str, id: String },

    #[error("missing ingredient `{0}`")]
    MissingIngredient(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("characteristic 2 is not allowed here: {0}")]
    CharacteristicTwo(String),

    #[error("{name}^{n} != 1")]
    NotRootOfUnity { name: String, n: u64 },

    #[error("closure validation failed: {0}")]
    Closure(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn shape(what: impl Into<String>, expected: impl ToString, found: impl ToString) -> Self {
        Error::Shape {
            what: what.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    /// Input problems (as opposed to failed axioms) map to CLI exit code 2.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Hypothesis { .. }
                | Error::AntipodeNotInvolutive { .. }
                | Error::NotCocommutative(_)
                | Error::NotCommutative(_)
                | Error::NoAntipode(_)
                | Error::Closure(_)
        )
    }
}
