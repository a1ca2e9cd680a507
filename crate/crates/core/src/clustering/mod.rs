//! Clustering of association graphs and the modularity score.
//!
//! Three methods are provided: components of a single Vietoris-Rips
//! complex ([`threshold_clusters`]), components whose merges are filtered by
//! persistence ([`persistence_clusters`]), and Markov Clustering ([`mcl`]).
//! [`sweep`] scores one method over a parameter grid.

mod graph;
mod mcl;
mod modularity;
mod sweep;
mod threshold;
mod union_find;

pub use graph::{Clustering, WeightedGraph};
pub use mcl::{mcl, MclParams, MclResult, SelfLoop};
pub use modularity::modularity;
pub use sweep::{linear_grid, sweep, Method, SweepRow, SweepTable};
pub use threshold::{merge_lifetimes, persistence_clusters, persistence_clusters_with, threshold_clusters};
pub use union_find::DisjointSet;
