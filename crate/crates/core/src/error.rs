use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set 1..={ground_size}")]
    VertexOutOfRange { vertex: u32, ground_size: u32 },

    #[error("ground sizes differ: {left} vs {right}")]
    GroundSizeMismatch { left: u32, right: u32 },

    #[error("the void complex has no dimension")]
    VoidDimension,

    #[error("{what} is not a subcomplex")]
    NotSubcomplex { what: &'static str },

    #[error("support pair is not disjoint: vertex {0} is in both parts")]
    OverlappingSupport(u32),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown field `{0}` (expected Q, F2, F3, Fp:<p>)")]
    UnknownField(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
