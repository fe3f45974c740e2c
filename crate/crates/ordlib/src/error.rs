use crate::rational::{Rational, RationalInterval};

pub type Result<T> = std::result::Result<T, Error>;

/// Data carried by [`Error::AmbiguousReconstruction`]: everything the caller
/// needs to report the failed reconstruction honestly.
#[derive(Debug, Clone)]
pub struct Ambiguity {
    pub candidates: Vec<Rational>,
    pub max_denominator: u32,
    pub bounds: RationalInterval,
    pub evidence: Vec<(u32, i64)>,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("cofinality budget exceeded: no floor bracket within |k| <= {budget}")]
    CofinalityBudgetExceeded { budget: i64 },

    #[error("length budget exceeded during handle reduction (cap {budget})")]
    LengthBudgetExceeded { budget: usize },

    #[error("zero exponent in root certificate entry {index}")]
    ZeroExponent { index: usize },

    #[error(
        "ambiguous rational reconstruction: {} candidates with denominator <= {}",
        .0.candidates.len(),
        .0.max_denominator
    )]
    AmbiguousReconstruction(Box<Ambiguity>),

    #[error("not a central cofinal element: {reason}")]
    InvalidCofinalElement { reason: String },

    #[error("invalid ball: {0}")]
    InvalidBall(String),

    #[error("actor {actor} has fewer than two knots")]
    InsufficientKnots { actor: String },

    #[error("no action map built for actor {actor}")]
    UnknownActor { actor: String },

    #[error("power {power} leaves the embedded ball")]
    BallExceeded { power: u32 },
}

impl Error {
    /// True for the typed resource-limit failures (search and rewriting
    /// budgets), which callers may want to distinguish from plain misuse.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CofinalityBudgetExceeded { .. } | Error::LengthBudgetExceeded { .. }
        )
    }
}
