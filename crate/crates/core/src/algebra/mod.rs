//! Prime-field arithmetic, oriented simplices and chains.
//!
//! Simplices are kept in canonical (sorted) form; an input ordering is
//! reduced to that form plus a parity sign. Chains are sparse maps from
//! simplices of one dimension to nonzero residues mod `p`.

mod chain;
mod field;
mod simplex;

pub use chain::{boundary_simplex, Chain};
pub use field::Field;
pub use simplex::{Simplex, Vertex};
