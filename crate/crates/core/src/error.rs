use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial `{dividend}` is not divisible by `{divisor}`")]
    NotDivisible { dividend: String, divisor: String },
    #[error("degree in y is {degree}, exceeds {bound}")]
    DegreeExceeded { degree: u32, bound: u32 },
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    NonUnitConstantTerm,
    #[error("series must start z + O(z^2) for reversion")]
    BadLowOrderTerms,
    #[error("series order {have} is too small, need {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("matrix is not tridiagonal: nonzero entry at ({row}, {col})")]
    NotTridiagonal { row: usize, col: usize },
    #[error("superdiagonal entry at ({row}, {col}) is `{value}`, expected 1")]
    NonMonicSuperdiagonal {
        row: usize,
        col: usize,
        value: String,
    },
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error("need moments through index {need}, have {have}")]
    InsufficientMoments { have: usize, need: usize },
    #[error("n = {n} exceeds the bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
