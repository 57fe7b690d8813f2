//! Two-sided ideals of path algebras of oriented tree quivers.
//!
//! The crate enumerates the subbimodules of the identity bimodule, classifies
//! the indecomposable ones by special functions, builds the ideal monoid and
//! its submonoid of indecomposables, and checks generating sets, relations
//! and presentations of these monoids against an integer-matrix
//! decategorification.

pub mod bimodule;
pub mod bitset;
pub mod catalan;
pub mod error;
pub mod fixtures;
pub mod monoid;
pub mod quiver;
pub mod relations;
pub mod par;
pub mod presentation;
pub mod specialfunc;
pub mod sweep;
pub mod trees;

pub use bimodule::{PathAlgebra, PathPair, Subbimodule, Subgraph};
pub use error::{Error, Result};
pub use quiver::{Chain, Quiver, ValidationReport, VertexSet};
pub use specialfunc::{Classification, SpecialFunction};
