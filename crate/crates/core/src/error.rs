use thiserror::Error;

/// Errors surfaced to callers. Conditions that can only arise from an
/// implementation bug (non-integral closed forms, fixed-point divergence)
/// panic instead of returning one of these.
#[derive(Debug, Error)]
pub enum Error {
    /// A coefficient beyond the truncation order was requested. This is an
    /// error rather than zero so that an under-truncated verification can
    /// never silently pass.
    #[error("truncation overflow: degree {needed} requested from a series truncated at order {order}")]
    TruncationOverflow { needed: usize, order: usize },

    #[error("series has a nonzero constant term; {operation} requires constant term zero")]
    NonzeroConstantTerm { operation: &'static str },

    /// An enumeration was refused because it would exceed the configured
    /// budget. The message carries the cost formula and its value.
    #[error("budget exceeded for {what}: cost {cost} > budget {budget}")]
    BudgetExceeded {
        what: String,
        cost: String,
        budget: String,
    },

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
