use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid constraint parameters s={s}, t={t}: both must be positive")]
    InvalidParameters { s: u64, t: u64 },

    #[error("non-normalizable affine constraint: gcd({s},{t}) > 1 with k={k}")]
    NonNormalizableAffine { s: u64, t: u64, k: i64 },

    #[error("affine offset k={k} is not supported here; only k=0 has a residue system")]
    AffineUnsupported { k: i64 },

    #[error("composition ({composition}) does not satisfy {constraint}")]
    ConstraintViolated {
        composition: String,
        constraint: String,
    },

    #[error("part {part} outside residue system {system}")]
    PartOutsideResidueSystem { part: u64, system: String },

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("malformed composition {input:?}: expected comma-separated positive integers")]
    MalformedComposition { input: String },

    #[error("n={n} exceeds the brute-force ceiling of {max}")]
    BruteForceCeiling { n: u64, max: u64 },

    #[error("empty range: {lo} > {hi}")]
    InvertedRange { lo: u64, hi: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
