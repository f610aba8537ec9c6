use thiserror::Error;

use crate::perm::Permutation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: S_{left} vs S_{right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{v} is not below {w} in Bruhat order")]
    NotBruhatBelow { v: Permutation, w: Permutation },

    /// The pair violates the singular-locus trichotomy. Always a bug.
    #[error("cannot classify ({v}, {w}): {reason}")]
    Classification {
        v: Permutation,
        w: Permutation,
        reason: String,
    },

    #[error("slice of ({v}, {w}) has unexpected shape: {reason}")]
    SliceShape {
        v: Permutation,
        w: Permutation,
        reason: String,
    },

    #[error("assignment has {got} values, slice has {expected} free coordinates")]
    AssignmentLength { expected: usize, got: usize },

    #[error("sweep size {0} out of range (2..=8)")]
    SweepSize(usize),
}
