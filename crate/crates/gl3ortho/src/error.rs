//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two interpolation samples share an abscissa.
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    /// A model constructor was asked for a negative or non-integer alpha.
    #[error("unsupported alpha: {0}")]
    UnsupportedAlpha(String),
    /// A highest weight violates the dominance condition.
    #[error("highest weight ({0}, {1}, {2}) is not dominant")]
    InvalidHighestWeight(i64, i64, i64),
    /// A Gelfand-Tsetlin action formula hit a vanishing denominator.
    /// Betweenness makes this unreachable; occurrence signals a bug.
    #[error("degenerate GT diagram: l21 - l22 = 0")]
    DegenerateDiagram,
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    /// Weight coordinates do not sum to zero.
    #[error("weight ({0}, {1}, {2}) is not in the root lattice")]
    NotInRootLattice(i64, i64, i64),
    /// Weight violates the sign conditions for Q+.
    #[error("weight ({0}, {1}, {2}) is not in Q+")]
    NotInQPlus(i64, i64, i64),
    /// An operator assumed to be of the cyclic form f ∘ u is not.
    #[error("operator is not of the cyclic form f * u: {0}")]
    NotCyclic(String),
    /// Polynomial extraction lacks enough sample points for the degree.
    #[error("insufficient support: need {needed} samples, have {available}")]
    InsufficientSupport { needed: usize, available: usize },
    /// A lower hypergeometric parameter vanishes before the series terminates.
    #[error("lower parameter {0} hits a nonpositive integer before termination")]
    PoleBeforeTermination(String),
    /// Applying a difference operator did not return a constant multiple.
    #[error("not an eigenfunction of the difference operator")]
    NotEigenfunction,
    /// A Gram minor vanished during orthogonalization.
    #[error("degenerate form: {0}")]
    DegenerateForm(String),
    /// The associated GT diagram violates betweenness.
    #[error("invalid GT diagram for the correspondence check")]
    InvalidDiagram,
}

pub type Result<T> = std::result::Result<T, Error>;
