//! Cross-correlation of an m-sequence of period 2^{2k} - 1 with its
//! decimation by d = (2^{lk} + 1) / (2^l + 1), computed exhaustively and
//! reconciled against the closed forms for its three-valued spectrum.

pub mod arith;
pub mod cli;
pub mod error;
pub mod field;
pub mod gf2;
pub mod report;
pub mod seq;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use seq::{CorrelationDistribution, SeqParams};
