use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("characteristic {0} is not a supported prime")]
    NonPrimeCharacteristic(u64),
    #[error("{0} is not an element of {1}")]
    DeltaNotInField(String, String),
    #[error("characteristic {0} is excluded: the result needs char K != 2,3")]
    BadCharacteristic(u32),

    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} exceeds the enumeration limit {1}")]
    DegreeTooLarge(usize, usize),
    #[error("element {0} does not lie in the ambient group")]
    NotASubgroupElement(String),
    #[error("malformed partial diagram: {0}")]
    MalformedPartialDiagram(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("dimension {0} exceeds the limit {1}")]
    DimensionTooLarge(usize, usize),

    #[error("diagram shapes differ: ({0},{1}) vs ({2},{3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("s_{0} would cross the wall")]
    IndexAcrossWall(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not cellularly stratified: {0}")]
    NotCellularlyStratified(String),
    #[error("layer {0} out of range 0..={1}")]
    LayerOutOfRange(usize, usize),

    #[error("partition {0} is not {1}-regular")]
    NotPRegular(String, u32),

    #[error("span is not invariant under the action")]
    NotInvariant,
    #[error("endomorphism algebra does not split over the prime field")]
    NonSplitField,
    #[error("actions are incompatible: {0}")]
    ActionsIncompatible(String),

    #[error("label ambiguous: {0}")]
    LabelAmbiguous(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

/// Coarse grouping used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Computation,
    Hypothesis,
    Ambiguity,
    Parse,
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::UnknownSuite(_) => ErrorClass::Parse,
            Error::BadCharacteristic(_)
            | Error::NonPrimeCharacteristic(_)
            | Error::DeltaNotInField(..)
            | Error::NotCellularlyStratified(_)
            | Error::NotPRegular(..)
            | Error::LayerOutOfRange(..)
            | Error::IndexAcrossWall(_)
            | Error::IndexOutOfRange(_)
            | Error::ShapeMismatch(..)
            | Error::SizeMismatch(..)
            | Error::DegreeMismatch(..)
            | Error::DegreeTooLarge(..)
            | Error::DimensionTooLarge(..) => ErrorClass::Hypothesis,
            Error::LabelAmbiguous(_) => ErrorClass::Ambiguity,
            _ => ErrorClass::Computation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
