//! Persistent homology of filtrations and homology of fixed complexes.
//!
//! [`reduce`] runs the standard left-to-right column reduction of the
//! boundary matrix, in filtration order, and reads intervals off the pivot
//! pairs. A column is reduced only against earlier columns, so when two
//! classes merge the younger one is the one that dies.

mod barcode;
mod homology;
mod reduction;
mod sparse;

pub use barcode::{Barcode, Interval};
pub use homology::{betti_at, betti_numbers, closure, homology_basis, HomologyContext};
pub use reduction::{reduce, reduce_with, ReduceOptions, ReducedFiltration};
