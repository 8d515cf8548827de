use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic factor order must be at least 2, got {0}")]
    InvalidFactor(u64),

    #[error("bad group descriptor at byte {pos}: {msg}")]
    Descriptor { pos: usize, msg: String },

    #[error("element has {got} coordinates, group has {expected} factors")]
    ElementArity { expected: usize, got: usize },

    #[error("coordinate {index} = {value} is out of range for factor {factor}")]
    CoordinateOutOfRange { index: usize, value: u64, factor: u64 },

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: String,
        cap: usize,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("spectrum has no zero eigenvalue, so it is not a Laplacian spectrum")]
    NotLaplacian,

    #[error("union needs at least one part")]
    EmptyUnion,

    #[error("copy counts must be at least 1")]
    ZeroCount,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial does not split over the integers in [0, {bound}]; leftover factor of degree {degree}")]
    NonIntegralSpectrum { bound: String, degree: usize },

    #[error("element is not of order two")]
    NotOrderTwo,
}

pub type Result<T> = std::result::Result<T, Error>;
