use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants fall into three groups that the command line maps onto exit
/// codes: malformed or invalid input data (exit 2), internal consistency
/// failures between independent computations (exit 3), and everything else.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} ({size} > {limit})")]
    Capacity {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("NotAnOrder: {0}")]
    NotAnOrder(String),

    #[error("NotUnital: first basis element is not 1")]
    NotUnital,

    #[error("Singular: {0}")]
    Singular(String),

    #[error("RankDeficient: generators do not span a full-rank lattice")]
    RankDeficient,

    #[error("NonIntegralLambda: L_{kappa} = {value} is not a nonnegative multiple of {kappa}")]
    NonIntegralLambda { kappa: u32, value: i64 },

    #[error("IndexNotCoprime: element index {index} is divisible by {p}")]
    IndexNotCoprime { index: String, p: u64 },

    #[error("ClosureViolation: index set {0:?} is not closed under divisors")]
    ClosureViolation(Vec<u32>),

    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),

    #[error("NotDivisor: {lam} does not divide {nu} - 1")]
    NotDivisor { nu: u64, lam: u64 },

    #[error("NoRepresentation: 4*{0} is not of the form A^2 + 27 B^2")]
    NoRepresentation(u64),

    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid field file: {0}")]
    FieldFile(String),
}

impl Error {
    /// True for errors that describe bad input data rather than a bug.
    pub fn is_invalid_data(&self) -> bool {
        matches!(
            self,
            Error::NotAnOrder(_)
                | Error::NotUnital
                | Error::Singular(_)
                | Error::FieldFile(_)
                | Error::NotPrime(_)
                | Error::NotDivisor { .. }
                | Error::Capacity { .. }
                | Error::Domain(_)
                | Error::Shape(_)
        )
    }
}

impl Error {
    /// Process exit status for the command line: 2 for invalid data, 3 for
    /// everything that signals disagreement between computations.
    pub fn exit_code(&self) -> i32 {
        if self.is_invalid_data() {
            2
        } else {
            3
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
