use thiserror::Error;

/// Errors surfaced by the engine. `OutOfScopeRegion` and `NotDivisible` are
/// ordinary domain answers ("the theory does not define this" / "no exact
/// quotient exists"); the `Internal*` variants are tripwires that indicate a
/// bug in the rewrite system itself and should never fire on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EqqError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown generator `{0}` for this space")]
    UnknownGenerator(String),

    #[error("grading ({a}, {b}) with a > 0, b < 0, a != -b lies outside the computed range of the point ring")]
    OutOfScopeRegion { a: i64, b: i64 },

    #[error("element is not divisible by {divisor}^{power}")]
    NotDivisible { divisor: String, power: i64 },

    #[error("cannot solve a + bg: rank {rank} and fixed value {fixed} have different parity")]
    Parity { rank: i64, fixed: i64 },
    #[error("{operation} is not available for space {space}")]
    SpaceMismatch { operation: &'static str, space: String },
    #[error("element is not homogeneous: gradings {0} and {1} both occur")]
    NotHomogeneous(String, String),
    #[error("expected exactly one basis monomial in the target grading, found {0}")]
    AmbiguousGrading(usize),

    #[error("restriction targets disagree: no single Burnside coefficient maps to both images")]
    InconsistentTargets,

    #[error("index {index} is out of range for {what} (limit {limit})")]
    IndexRange {
        what: &'static str,
        index: i64,
        limit: i64,
    },

    #[error("internal: rewrite did not terminate within {0} steps")]
    InternalNonTerminating(u64),

    #[error("internal: reached a non-basis monomial with no applicable rule: {0}")]
    InternalStuck(String),

    #[error("internal: division required inside a rewrite step but failed: {0}")]
    InternalNonDivisible(String),
}

pub type Result<T> = std::result::Result<T, EqqError>;
