//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no entries in unit dictionary")]
    NoEntries,
    #[error("record {record} of document {document} is missing required field `{field}`")]
    MissingField {
        document: usize,
        record: usize,
        field: &'static str,
    },
    #[error("unit `{name}` is declared with conflicting dimensions `{first}` and `{second}`")]
    ConflictingDimension {
        name: String,
        first: String,
        second: String,
    },
    #[error("unit `{name}` has conflicting `{field}` definitions across documents")]
    ConflictingField { name: String, field: &'static str },
    #[error("unit `{name}` declares unsupported dimension `{dimension}`")]
    UnsupportedDimension { name: String, dimension: String },
    #[error("unit `{0}` has no symbols or surfaces")]
    NoSymbols(String),
    #[error("invalid conversion factor `{factor}` for unit `{name}`")]
    InvalidFactor { name: String, factor: String },
    #[error("invalid derivation for unit `{0}`: power must be a nonzero integer")]
    InvalidDerivation(String),
    #[error("conversion chain for unit `{0}` does not resolve to a base unit")]
    BadConversionChain(String),
    #[error("dimension `{dimension}` has more than one base unit (`{first}`, `{second}`)")]
    MultipleBaseUnits {
        dimension: String,
        first: String,
        second: String,
    },
    #[error("unknown dimension `{0}`")]
    UnknownDimension(String),
    #[error("unknown unit `{0}`")]
    UnknownUnit(String),
    #[error("label `{label}` is not valid for dimension `{dimension}`")]
    InvalidLabel { label: String, dimension: String },
    #[error("units `{from}` ({from_dimension}) and `{to}` ({to_dimension}) have different dimensions")]
    DimensionMismatch {
        from: String,
        from_dimension: String,
        to: String,
        to_dimension: String,
    },
    #[error("non-convertible unit `{0}`")]
    NonConvertible(String),
    #[error("no rows")]
    NoRows,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least two paired samples")]
    TooFewSamples,
    #[error("zero-variance differences")]
    ZeroVariance,
    #[error("no discordant pairs")]
    NoDiscordantPairs,
    #[error("no candidate symbols for dimension `{0}`")]
    NoCandidates(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown column `{0}`")]
    UnknownColumn(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("report schema mismatch: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
