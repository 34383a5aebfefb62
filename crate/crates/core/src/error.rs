use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    ZeroVertices,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("generator {s} lies outside 1..={max}")]
    GeneratorOutOfRange { s: usize, max: usize },
    #[error("vertex {v} lies outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(String),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("operation undefined on a complex without vertices")]
    NoVertices,
    #[error("complex is not pure")]
    NotPure,
    #[error("vertex universes of the join factors overlap")]
    OverlappingUniverses,
    #[error("dimension {i} outside -1..={max}")]
    DimensionOutOfRange { i: isize, max: isize },
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u32),
    #[error("Serre level must be at least 1")]
    BadSerreLevel,
    #[error("order is not a permutation of the facets")]
    NotAPermutation,
    #[error("complex is not invariant under v -> v+1 mod {0}")]
    NotRotationInvariant(usize),
    #[error("isomorphism search is limited to {limit} vertices, got {n}")]
    IsomorphismBudget { n: usize, limit: usize },
    #[error("torsion coefficient does not fit in 64 bits")]
    TorsionOverflow,
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
