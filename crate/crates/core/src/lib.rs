//! Sampling, validation, and analysis of mountain-valley assignments on
//! flat-foldable crease patterns.
//!
//! The crate models crease patterns as planar straight-line graphs
//! ([`pattern`]), decides local flat-foldability per interior vertex
//! ([`local`], [`vertex`]), generates the standard tessellation families
//! ([`families`]), and studies the face-flip Markov chain over the locally
//! flat-foldable state space: flip graphs and their structure checks
//! ([`flipgraph`]), exact transition matrices, mixing times and spectral gaps
//! ([`chain`]), the bijection between Miura assignments and pinned grid
//! 3-colorings ([`coloring`]), and global flat-foldability of square grids by
//! layer-order search ([`global`]).

pub mod chain;
pub mod coloring;
pub mod error;
pub mod families;
pub mod flipgraph;
pub mod global;
pub mod io;
pub mod local;
pub mod pattern;
pub mod rng;
pub mod svg;
pub mod vertex;

pub use error::{Error, Result};
pub use pattern::{CreasePattern, Family, MvAssignment, VertexStar};

/// Library version string, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
