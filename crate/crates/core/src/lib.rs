//! Graph symmetry toolkit around the Mycielskian construction.
//!
//! The crate builds Mycielskians `mu(G)`, generalized Mycielskians `mu_t(G)`
//! and their iterates, searches for (color-preserving) automorphisms by
//! pruned backtracking, constructs explicit distinguishing edge colorings of
//! star Mycielskians and "mimic" colorings of non-star Mycielskians, and
//! computes exact distinguishing indices of small graphs.
//!
//! Everything here is `no_std + alloc` compatible; IO, file formats and the
//! command-line front end live in the companion `mycdist-cli` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod automorphism;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod mycielski;
pub mod perm;
pub mod solver;

pub use coloring::EdgeColoring;
pub use graph::Graph;
pub use mycielski::{LabeledGraph, VertexRole};
pub use perm::Permutation;
