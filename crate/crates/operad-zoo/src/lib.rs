//! A zoo of concrete operads whose components are lattices: integer shifts
//! and multi-indices, Tamari lattices of binary trees, the weak order on
//! permutations, Young's lattice of integer partitions, subsets, ternary
//! cube/cross-polytope words, polygon face lattices, associahedron
//! subdivisions, and grid walks — together with their codecs, involutions,
//! and group actions.

use thiserror::Error;

pub mod colored;
pub mod invpairs;
pub mod multiindex;
pub mod partitions;
pub mod perms;
pub mod polygon;
pub mod subdivision;
pub mod subsets;
pub mod tamari;
pub mod walks;
pub mod words;

/// Errors raised by constructors, codecs, and bounded composition oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("not a weight sequence: {0}")]
    NotAWeightSequence(String),
    #[error("not in the normalization domain: {0}")]
    NotInL(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no permutation realizes the closed inversion set (internal bug)")]
    NoPermutationForClosure,
    #[error("partition does not have distinct parts: {0}")]
    NotDistinctParts(String),
    #[error("invalid partition shape: {0}")]
    InvalidPartitionShape(String),
    #[error("faces belong to different polygons: {0}")]
    PolygonMismatch(String),
    #[error("letter outside the declared alphabet: {0}")]
    AlphabetMismatch(String),
    #[error("step not in the declared step set: {0}")]
    StepNotInS(String),
    #[error("component carries no rank function")]
    NoRankFunction,
}
