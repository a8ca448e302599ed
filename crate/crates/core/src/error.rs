use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring modulus must be positive")]
    ZeroModulus,
    #[error("factor {factor} does not divide the ring modulus {modulus}")]
    FactorNotDividing { factor: u64, modulus: u64 },
    #[error("factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("{0} is not a divisor of the ring modulus")]
    NotADivisor(u64),
    #[error("capacity exceeded: {what} needs more than the limit of {limit}")]
    Capacity { what: &'static str, limit: usize },
    #[error("operands belong to different modules")]
    OwnerMismatch,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("topologies have different ground sets")]
    GroundMismatch,
    #[error("ill-defined homomorphism: {0}")]
    IllDefinedHom(String),
    #[error("homomorphism is not injective")]
    NotInjective,
    #[error("submodule is not contained in the homomorphism image")]
    NotInImage,
    #[error("point set is not closed")]
    NotClosed,
    #[error("descriptor syntax error: {0}")]
    DescriptorSyntax(String),
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
