use thiserror::Error;

use crate::schur::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?} is not weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("partition has {parts} parts but rank is only {rank}")]
    RankTooSmall { parts: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("counts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("weight is not in the positive root lattice below the top weight")]
    NotInPositiveRootLattice,

    #[error("root lattice element is zero")]
    ZeroRoot,

    #[error("unsupported Lie algebra: {0}")]
    UnsupportedFamily(String),

    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("empty factor list")]
    EmptyFactors,

    #[error("size {size} exceeds the box limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
