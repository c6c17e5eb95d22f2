use thiserror::Error;

use crate::field::FieldSpec;
use crate::format::FormatError;

/// Structural errors. Axiom failures are not errors: certifiers report
/// them as verdicts in a [`crate::CertReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("`{text}` is not an element of {field}")]
    BadElement { text: String, field: FieldSpec },

    #[error("residue {value} is out of range for GF({modulus})")]
    ResidueOutOfRange { value: u64, modulus: u64 },

    #[error("shape mismatch in {what}: expected {expected:?}, found {found:?}")]
    Shape {
        what: String,
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("{what} is not available over {field}")]
    UnsupportedField { what: String, field: FieldSpec },

    #[error("base mismatch: {0}")]
    BaseMismatch(String),

    #[error("{what} is not certified: {failed} fails")]
    NotCertified { what: String, failed: String },

    #[error("unknown {what} `{name}`")]
    UnknownName { what: String, name: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Format(#[from] FormatError),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn shape(what: impl Into<String>, expected: (usize, usize), found: (usize, usize)) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Shape {
            what: what.into(),
            expected,
            found,
        })
    }
}
