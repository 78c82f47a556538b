use thiserror::Error;

use crate::quadric::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate line: both points are {0:#b}")]
    DegenerateLine(u16),

    #[error("ambient dimension {0} is outside the supported range 1..=15")]
    DimensionOutOfRange(usize),

    #[error("{family} quadrics need {needs} n, got n = {n}")]
    ParityMismatch {
        family: Family,
        n: usize,
        needs: &'static str,
    },

    #[error("{family} quadric needs n >= {min}, got n = {n}")]
    DimensionTooSmall { family: Family, n: usize, min: usize },

    #[error("subspace dimension {d} out of range 0..={g}")]
    SubspaceDimOutOfRange { d: i32, g: i32 },

    #[error("point {0:#b} is not on the quadric")]
    PointNotOnQuadric(u16),

    #[error("point {0:#b} lies in the given generator")]
    PointInGenerator(u16),

    #[error("subspace is not a generator of the quadric")]
    NotAGenerator,

    #[error("subspace is not contained in the quadric")]
    NotSingular,

    #[error("no nucleus: {0} quadrics have a trivial radical")]
    NoNucleus(Family),

    #[error("s = {s} must satisfy 0 <= s < g = {g}")]
    SwitchIndexOutOfRange { s: i32, g: i32 },

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("vertex typing has {typing} entries, graph has {graph} vertices")]
    SizeMismatch { typing: usize, graph: usize },

    #[error("Godsil-McKay condition violated at vertex {vertex}: {reason}")]
    GmViolation { vertex: usize, reason: String },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("not a recognizable switched graph: {0}")]
    NotRecognizable(String),

    #[error("clique {0:?} is not a maximal clique")]
    NotMaximalClique(Vec<usize>),

    #[error("clique classification failed: {0}")]
    Classification(String),

    #[error("search exceeded node budget of {0}")]
    BudgetExceeded(u64),

    #[error("graph has {v} vertices, automorphism search is bounded at {bound}")]
    TooLarge { v: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
