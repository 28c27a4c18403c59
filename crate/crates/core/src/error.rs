use std::fmt;

use crate::linalg::{format_rational, Rational};

/// A concrete counterexample to an identity: the basis indices (0-based)
/// where it fails and the two sides as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, lhs: Vec<Rational>, rhs: Vec<Rational>) -> Self {
        Witness { indices, lhs, rhs }
    }

    /// Witness for an identity of the form `expr = 0`.
    pub fn nonzero(indices: Vec<usize>, value: Vec<Rational>) -> Self {
        let zero = crate::linalg::zero_vector(value.len());
        Witness {
            indices,
            lhs: value,
            rhs: zero,
        }
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.indices.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(
            f,
            "({}): {} != {}",
            labels.join(", "),
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )
    }
}

/// Outcome of checking one identity on all basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    /// Converts a failure into [`Error::Violated`] naming the condition.
    pub fn require(self, condition: &'static str) -> Result<()> {
        match self {
            Verdict::Holds => Ok(()),
            Verdict::Fails(witness) => Err(Error::Violated { condition, witness }),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Dimensions of the inputs do not fit together.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Two algebras with different signs were combined.
    #[error("sign mismatch: {0}")]
    SignMismatch(String),
    /// A bracket tensor with `c(i,j,k) != -δ c(j,i,k)`.
    #[error("bracket entries ({i}, {j}, {k}) and ({j}, {i}, {k}) violate the sign rule")]
    SignRule { i: usize, j: usize, k: usize },
    /// A mathematical precondition or postcondition failed on basis elements.
    #[error("{condition} fails at {witness}")]
    Violated { condition: &'static str, witness: Witness },
    /// A precondition without a basis witness (singular twist, bad exponent).
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    /// True for malformed input as opposed to a failed mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Shape(_) | Error::SignMismatch(_) | Error::SignRule { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
