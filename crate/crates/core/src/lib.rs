//! Exact quiver mutation, maximal green and reddening sequences, and
//! combinatorial Donaldson–Thomas invariants as products of quantum
//! dilogarithm series.

pub mod dt;
pub mod error;
pub mod qalgebra;
pub mod quiver;
pub mod search;

pub use error::{Error, Result};
pub use quiver::{
    canonical_form, frozen_isomorphism, CMatrix, CanonicalKey, MutationState, Permutation, Quiver,
    QuiverFile, VertexStatus,
};
