//! Exact computations around k-edges, rectilinear crossing numbers, allowable
//! sequences, 3-decomposability and the extremal transposition digraphs.

pub mod allowseq;
pub mod bounds;
pub mod cli;
pub mod decomp;
pub mod digraph;
pub mod error;
pub mod geom;
pub mod kedges;
pub mod pointio;

pub use error::{Degeneracy, Error, Result};
