use thiserror::Error;

/// Errors raised across the crate. Rational payloads are rendered as `num/den` strings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("job {job}: migrated total {migrated} exceeds budget {budget}")]
    BudgetExceeded {
        job: usize,
        migrated: String,
        budget: String,
    },
    #[error("job {job} has grade of service 1 and cannot be placed on machine 2")]
    HierarchyViolation { job: usize },
    #[error("migration references job {job}, which has not been assigned")]
    UnknownJob { job: usize },
    #[error("job {job} is already in the schedule")]
    DuplicateJob { job: usize },
    #[error("job {got} arrived out of order, expected index {expected}")]
    OutOfOrder { expected: usize, got: usize },
    #[error("migration of job {job} does not change its machine or lists it twice")]
    InvalidMigration { job: usize },
    #[error("job {job} has non-positive size {size}")]
    NonPositiveSize { job: usize, size: String },
    #[error("migration factor must be nonnegative, got {0}")]
    NegativeM(String),
    #[error("{algorithm} is not defined for migration factor {m}")]
    RegimeMismatch { algorithm: String, m: String },
    #[error("exhaustive search over {size} items exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("bad gamma {gamma}: need 0 < gamma < mu = {mu}")]
    BadGamma { gamma: String, mu: String },
    #[error("bad epsilon {0}: need 0 < eps < 1/10, 1/eps integral and m + eps < 1")]
    BadEps(String),
    #[error("bad theta {0}: need 1/2 < theta < 2/3 and |4 theta^2 + theta - 2| < 1e-8")]
    BadTheta(String),
    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
