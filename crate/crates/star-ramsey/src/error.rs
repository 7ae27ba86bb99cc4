use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The family fails the additive sum condition, so the closed forms do not apply.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Inputs fall outside the range the closed forms cover.
    #[error("out of theorem range: {0}")]
    OutOfTheoremRange(String),

    /// A self-check that must hold by construction failed. This is a bug in the
    /// library, never a property of the input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// The requested case is excluded from the relevant piecewise definition.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// An even order was required.
    #[error("order {0} is odd; an even order is required")]
    OddOrder(usize),

    /// An odd order was required.
    #[error("order {0} is even; an odd order is required")]
    EvenOrder(usize),

    /// The edge list does not form a single spanning path.
    #[error("not a path: {0}")]
    NotAPath(String),

    /// Graph and family disagree on the number of colors.
    #[error("color count mismatch: graph has {graph}, family has {family}")]
    ColorCountMismatch { graph: usize, family: usize },

    /// The search node budget ran out before the question was decided.
    #[error("node budget exhausted after {0} nodes")]
    BudgetExhausted(u64),

    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::OutOfTheoremRange(_) => "out_of_theorem_range",
            Error::InternalInconsistency(_) => "internal_inconsistency",
            Error::NotApplicable(_) => "not_applicable",
            Error::OddOrder(_) => "odd_order",
            Error::EvenOrder(_) => "even_order",
            Error::NotAPath(_) => "not_a_path",
            Error::ColorCountMismatch { .. } => "color_count_mismatch",
            Error::BudgetExhausted(_) => "budget_exhausted",
            Error::InvalidInput(_) => "invalid_input",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
