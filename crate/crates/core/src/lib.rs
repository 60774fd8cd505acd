//! Pivot, loop complementation and dual pivot on F2 matrices, graphs and
//! set systems, together with the word algebra they generate.
//!
//! The three single-vertex operations are involutions that generate a copy
//! of S3 per vertex; any sequence of them collapses to the normal form
//! `+X *Y +Z` with `X` contained in `Y`. The crate provides:
//!
//! - exact linear algebra over F2 ([`matrix`]): determinant, rank, kernel,
//!   principal pivot transform, diagonal addition, dual pivot;
//! - set systems with vertex flips, delta-matroid checking and the bridges
//!   to and from matrices ([`set_system`]);
//! - graph-level operations with applicability checks: local and edge
//!   complementation, elementary decompositions, and the loop-free
//!   (simple-graph) variants ([`graph`]);
//! - parsing, normalizing and applying operation words ([`word`]);
//! - orbit enumeration under elementary pivots with DOT export ([`orbit`]);
//! - text formats for graphs and set systems ([`text`]);
//! - the built-in verification suites behind `pivot verify` ([`verify`]).

pub mod error;
pub mod graph;
pub mod ground;
pub mod matrix;
pub mod orbit;
pub mod rng;
pub mod set_system;
pub mod text;
pub mod verify;
pub mod word;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use graph::{Graph, SimpleGraph};
pub use ground::{Ground, VertexSet, MAX_VERTICES};
pub use matrix::{F2Matrix, F2Vector};
pub use orbit::{OrbitGraph, OrbitOptions};
pub use set_system::{DeltaMatroidCheck, Flip2x2, SetSystem, S3, MAX_SET_SYSTEM_VERTICES};
pub use word::{GroupElement, NormalForm, OpKind, OpToken, Word};
