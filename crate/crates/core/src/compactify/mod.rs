//! Strict compactifications: one-point, Wallman, glued finite remainders.

pub mod finite;
pub mod line;
pub mod quotient;

use thiserror::Error;

pub use finite::FiniteBundle;
pub use line::{
    alexandroff_strict, bounded_interval_compactification, compare, finite_remainder, glue, two_point_glue,
    wallman_strict_line, Additivity, AdditivityWitness, Comparison, Glue, LineBundle, LineLayer, RemPoint, TotalSet,
    Verdict,
};
pub use quotient::QuotientLattice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompactifyError {
    #[error("{0} is not open")]
    NotOpen(String),
    #[error("space is not weakly normal")]
    NotWeaklyNormal,
    #[error("Wallman space could not be certified compact")]
    WallmanNotCompactCertified,
    #[error("extension is not admissibly additive: {0}")]
    NotApplicable(String),
    #[error("input is already topologically compact")]
    TopologicallyCompactInput,
    #[error("not a lattice isomorphism: {0}")]
    NotALatticeIso(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("invalid partition: {0}")]
    PartitionInvalid(String),
    #[error("search over {size} points exceeds the limit {max}")]
    SearchSpaceTooLarge { size: usize, max: usize },
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),
    #[error("no witness exists")]
    NoWitness,
}
