//! Instance supply, theorem suites, the space document format and DOT export.

pub mod cli;
pub mod document;
pub mod dot;
pub mod enumerate;
pub mod sample;
pub mod suites;

use thiserror::Error;

pub use document::{check_document, CheckReport, Document, Resolved};
pub use enumerate::enumerate_complete_rings;
pub use suites::{run_suite, Counterexample, SuiteConfig, SuiteReport, SUITES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("carrier size {n} exceeds the enumeration bound {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("document: {0}")]
    Document(String),
    #[error("unknown object `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    Invalid(String),
}
