use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {modulus:#x} is not a primitive polynomial of degree {degree}")]
    NonPrimitiveModulus { modulus: u32, degree: u32 },
    #[error("extension degree {0} is outside the supported range 2..=20")]
    DegreeTooLarge(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not in the subfield GF(2^{0})")]
    NotInSubfield(u32),
    #[error("bad trace tower: {j} does not divide {i}, or {i} does not divide m = {m}")]
    BadTower { i: u32, j: u32, m: u32 },
    #[error("discrete logarithm of zero")]
    DlogOfZero,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("3 does not divide q - 1 = {0}")]
    FieldWithoutCubicStructure(u64),
    #[error("{a} and {n} are not coprime")]
    NotCoprime { n: u64, a: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("parameter invariant failed: {0}")]
    InvariantFailure(String),
    #[error("shift {tau} is outside 0..{n}")]
    ShiftOutOfRange { tau: u64, n: u64 },
    #[error("q = {q} exceeds the exhaustive limit {limit}")]
    TooLargeForExhaustive { q: u64, limit: u64 },
    #[error("unexpected radical dimension {0} over GF(2)")]
    UnexpectedDimension(u32),
    #[error("T(a, b) = {direct} but the radical dimension predicts {predicted}")]
    PredictionMismatch { direct: i64, predicted: i64 },
    #[error("h = {h} does not divide 2^k + 1 = {bound}")]
    BadH { h: u64, bound: u64 },
    #[error("input is a cube")]
    CubeInput,
    #[error("k = {0} must be odd and at least 3")]
    BadK(u32),
}
