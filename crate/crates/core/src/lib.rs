//! Exact computations for toric geometry.

pub mod cohomology;
pub mod cuts;
pub mod error;
pub mod fans;
pub mod ideals;
pub mod lattice;
pub mod matroids;
pub mod phylo;
pub mod polyhedra;
pub mod triangulations;

pub use error::{Error, Result};
