//! Maps between generalized topological spaces: continuity notions, extensions over Wallman
//! spaces and dense supersets, and functional separation by maps into unit intervals.

pub mod continuity;
pub mod extension;
pub mod maps;
pub mod separation;

use std::fmt;

use thiserror::Error;

use crate::carrier::{AtomSet, IntervalSet};
use crate::gts::AffineChain;

pub use continuity::{continuity, hierarchy_facts, is_zero_dimensional, ContinuityKind, HierarchyReport};
pub use extension::{taimanov_check, wallman_extension, Extension, TaimanovReport};
pub use maps::{FiniteMap, GtsMap, Piece, PlMap};
pub use separation::{ig_separation, search_separation, IntervalModel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("unsupported combination: {0}")]
    BackendUnsupported(String),
    #[error("closed base is not stable under finite intersections: {0}")]
    BaseNotIntersectionStable(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("unknown interval model {0:?}")]
    BadModelTag(String),
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
}

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    FiniteFamily(Vec<AtomSet>),
    FiniteSet(AtomSet),
    LineFamily(Vec<IntervalSet>),
    LineSet(IntervalSet),
    Chain(AffineChain),
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::FiniteFamily(v) => {
                let s: Vec<String> = v.iter().map(|a| a.to_string()).collect();
                write!(f, "family {{{}}}", s.join(", "))
            }
            Witness::FiniteSet(a) => write!(f, "set {a}"),
            Witness::LineFamily(v) => {
                let s: Vec<String> = v.iter().map(|a| a.to_string()).collect();
                write!(f, "family {{{}}}", s.join(", "))
            }
            Witness::LineSet(a) => write!(f, "set {a}"),
            Witness::Chain(c) => write!(f, "chain {c}"),
            Witness::Note(s) => write!(f, "{s}"),
        }
    }
}

/// `Ok(())` when a property holds, otherwise the reason it fails.
pub type Check = Result<(), Witness>;
