//! Exact arithmetic in `Z[q, q^-1]`, its fraction field, and linear algebra
//! over that field.

mod laurent;
mod matrix;
mod parse;
mod qrat;

pub use laurent::LaurentPoly;
pub use matrix::{qmat_rank, qmat_solve, QMatrix};
pub use parse::parse_qrat;
pub use qrat::{q_diff, q_sum, qrat_arith, ArithOp, QRat};

use thiserror::Error;

/// Parses a rational number such as `1/2` or `-3` (used for `q = q0`
/// specializations).
pub fn parse_rational(s: &str) -> Result<num_rational::BigRational, QError> {
    s.trim().parse().map_err(|_| QError::Parse {
        pos: 0,
        msg: format!("not a rational number: {s:?}"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
