//! Exact, small-scale machinery for permutations and their inversion graphs.
//!
//! Permutations are 1-based one-line arrays. Graphs live on vertices `1..=n`.
//! Every search in here is exhaustive, so each operation documents the size
//! it is willing to handle and returns [`Error::SizeCap`] beyond it.
//!
//! The modules roughly follow the order in which the ideas build on each other:
//!
//! - [`perm`]: Lehmer codes, patterns, symmetries, descents, intervals.
//! - [`graph`]: simple graphs, canonical forms, graph6, perfection.
//! - [`invgraph`]: inversion graphs, interval realisations, recognition.
//! - [`prime`]: modules, chains, edge classes, transitive orientations.
//! - [`pins`]: pin sequences in permutation plots.
//! - [`letters`]: letter graphs and lettericity.
//! - [`grid`]: gridding matrices, drawings and monotone runs.
//! - [`permletters`]: letter graphs over a host permutation.
//! - [`reflect`]: edge and nonedge reflections.

mod error;

pub mod graph;
pub mod grid;
pub mod invgraph;
pub mod letters;
pub mod perm;
pub mod permletters;
pub mod pins;
pub mod prime;
pub mod reflect;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use perm::Permutation;
