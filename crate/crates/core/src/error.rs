use crate::pairing::Group;

/// Errors raised by the algebra, the schemes, the attacks and the game harness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("element is in {found}, expected {expected}")]
    WrongGroup { expected: Group, found: Group },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("malformed encoding: {0}")]
    MalformedEncoding(String),
    #[error("{0} is not a prime usable as a group order")]
    NotPrime(u64),
    #[error("unknown backend `{0}`")]
    UnknownBackend(String),
    #[error("{0} must be nonzero")]
    ZeroScalar(&'static str),
    #[error("invalid message: {0}")]
    InvalidMessage(String),
    #[error("extraction nonce makes h + r + y vanish")]
    DegenerateNonce,
    #[error("known partial private key fails the genuineness check")]
    InvalidInputKey,
    #[error("observed signature does not verify")]
    InvalidObservation,
    #[error("kumar signatures require state information")]
    MissingDelta,
    #[error("role violation: {0}")]
    RoleViolation(String),
    #[error("oracle query budget of {0} calls exhausted")]
    QueryLimit(usize),
    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),
    #[error("payload does not match the scheme: {0}")]
    Payload(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
