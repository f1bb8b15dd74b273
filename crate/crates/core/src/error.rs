use thiserror::Error;

use crate::subset::IndexSet;

/// Errors raised by the library. Matrix positions and letters are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("rank {0} exceeds the supported maximum of 64")]
    RankTooLarge(usize),
    #[error("diagonal entry ({index},{index}) is {value}, expected 2")]
    BadDiagonal { index: usize, value: i64 },
    #[error("off-diagonal entry ({row},{col}) is positive: {value}")]
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    #[error("entry ({row},{col}) is zero but ({col},{row}) is not")]
    AsymmetricZero { row: usize, col: usize },
    #[error("principal submatrix on {0} is decomposable")]
    Decomposable(IndexSet),
    #[error("empty index subset")]
    EmptySubset,
    #[error("index {index} out of range 1..={rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("subset {0} is not special")]
    NotSpecial(IndexSet),
    #[error("letters {letters} are not contained in {subset}")]
    NotInSubgroup { letters: IndexSet, subset: IndexSet },
    #[error("subset {0} is not of finite type")]
    NotFiniteTypeJ(IndexSet),
    #[error("point could not be certified in the Tits cone within the budget")]
    NotInCone,
    #[error("cannot sample points of the requested region")]
    CannotSample,
}

impl Error {
    /// Stable name used in machine-readable error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::RankTooLarge(_) => "RankTooLarge",
            Error::BadDiagonal { .. } => "BadDiagonal",
            Error::PositiveOffDiagonal { .. } => "PositiveOffDiagonal",
            Error::AsymmetricZero { .. } => "AsymmetricZero",
            Error::Decomposable(_) => "Decomposable",
            Error::EmptySubset => "EmptySubset",
            Error::BadGenerator { .. } => "BadGenerator",
            Error::NotSpecial(_) => "NotSpecial",
            Error::NotInSubgroup { .. } => "NotInSubgroup",
            Error::NotFiniteTypeJ(_) => "NotFiniteTypeJ",
            Error::NotInCone => "NotInCone",
            Error::CannotSample => "CannotSample",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
