use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A forest count attached to a budget failure.
///
/// Counting is exact whenever the determinant fits the exact-count size guard;
/// past that only a certified lower bound is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCount {
    Exact(BigUint),
    AtLeast(BigUint),
}

impl ForestCount {
    pub fn value(&self) -> &BigUint {
        match self {
            ForestCount::Exact(v) | ForestCount::AtLeast(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ForestCount::Exact(_))
    }
}

impl fmt::Display for ForestCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestCount::Exact(v) => write!(f, "{v}"),
            ForestCount::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("forest budget exceeded{}: {count} maximal forests, budget {budget}", step_suffix(*step))]
    Budget {
        count: ForestCount,
        budget: u64,
        /// Iteration step at which the budget was hit, if any.
        step: Option<usize>,
    },

    #[error("resource limit: {0}")]
    Resource(String),
}

fn step_suffix(step: Option<usize>) -> String {
    match step {
        Some(s) => format!(" at step {s}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn at_step(self, s: usize) -> Self {
        match self {
            Error::Budget { count, budget, .. } => Error::Budget {
                count,
                budget,
                step: Some(s),
            },
            other => other,
        }
    }
}
