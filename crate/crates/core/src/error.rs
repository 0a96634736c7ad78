use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Cartan type {letter}{rank}")]
    InadmissibleType { letter: char, rank: usize },
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("Weyl element is not an involution")]
    NotAnInvolution,
    #[error("index set {0:?} is not invariant under the diagram symmetry")]
    NotThetaInvariant(Vec<usize>),
    #[error("unknown class {label:?} for {group}; available: {available}")]
    UnknownClass {
        group: String,
        label: String,
        available: String,
    },
    #[error("class {label:?} has no isogeny data for {tag:?}")]
    NoIsogeny { label: String, tag: String },
    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
    #[error("weight {0:?} has the wrong length or is not dominant")]
    BadWeight(Vec<i64>),
    #[error("catalog data: {0}")]
    Data(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
