use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("not an element of B_{level}: {reason}")]
    NotMember { level: u32, reason: String },
    #[error("unknown letter token `{0}`")]
    UnknownToken(String),
    #[error("cannot parse coordinate `{0}`")]
    BadCoordinate(String),
    #[error("element is not of level 1")]
    NotLevelOne,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("not a classical highest weight element: {0}")]
    NotHighestWeight(String),
    #[error("replay failed at step {step} of path {path:?}")]
    ReplayFailed { step: usize, path: Vec<u8> },
    #[error("carrier did not return to the vacuum; defect absorbed after cell {cell}")]
    CarrierNotReturned { cell: usize },
    #[error("state needs {needed} trailing vacuum cells, found {found}")]
    InsufficientPadding { needed: usize, found: usize },
    #[error("not a soliton run: {0}")]
    NotSoliton(String),
    #[error("soliton lengths must strictly decrease, got {0:?}")]
    LengthOrder(Vec<u32>),
}
