//! Circulant graphs, their independence complexes, and deciders for
//! well-coveredness, Serre's condition `S_r`, Cohen–Macaulayness,
//! Buchsbaumness, shellability and vertex decomposability.

pub mod bits;
pub mod circulant;
pub mod classify;
pub mod cli;
pub mod complex;
pub mod error;
pub mod homology;
pub mod theorems;

pub use bits::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use complex::SimplicialComplex;
