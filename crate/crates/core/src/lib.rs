//! Exact workbench for generalized topological spaces.

pub mod carrier;
pub mod ring;
pub mod gts;
pub mod filters;
pub mod compactify;
pub mod morphisms;
pub mod products;
pub mod lab;
