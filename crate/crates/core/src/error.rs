use thiserror::Error;

use crate::cartan::Weight;
use crate::qfield::QError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] QError),
    #[error("operands live in different Borel halves")]
    MixedSides,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("weight {0} is not a nonnegative combination of simple roots")]
    NotInPositiveCone(Weight),
    #[error("word {word:?} does not have weight {nu}")]
    WrongWeight { word: Vec<u8>, nu: Weight },
    #[error("chosen words are linearly dependent modulo the pairing radical at weight {0}")]
    DependentBasis(Weight),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
