//! Graph-symmetry toolkit: automorphism groups, motion and cycle-norm
//! analysis, generators for structured infinite families evaluated on finite
//! ball truncations, and constructive symmetry-breaking 2-colorings verified
//! against an exhaustive distinguishing-number oracle.

pub mod autgroup;
pub mod breaking;
pub mod coloring;
pub mod corpus;
pub mod distnum;
pub mod error;
pub mod generators;
pub mod graph;
pub mod motion;
pub mod perm;
pub mod rng;

pub use error::{Error, Result};
