//! Persistent homology and clustering of word-association networks.

pub mod algebra;
pub mod cli;
pub mod clustering;
pub mod complex;
pub mod error;
pub mod ingest;
pub mod persistence;
pub mod synthetic;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
