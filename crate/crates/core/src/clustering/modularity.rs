use super::graph::{Clustering, WeightedGraph};
use crate::error::{Error, Result};

/// Weighted modularity
///
/// `Q = (1/M) Σ_{i,j} [ω_ij − k_i k_j / M] δ(c_i, c_j)`
///
/// with the sum over ordered vertex pairs, so `M = Σ_{i,j} ω_ij` is twice the
/// total edge weight. Evaluated per cluster as `Σ_c (W_c/M − (K_c/M)²)`,
/// where `W_c` is the ordered-pair weight inside `c` and `K_c` its degree sum.
pub fn modularity(g: &WeightedGraph, c: &Clustering) -> Result<f64> {
    if c.len() != g.vertex_count() {
        return Err(Error::ClusteringSize {
            found: c.len(),
            expected: g.vertex_count(),
        });
    }
    let m: f64 = 2.0 * g.edges().iter().map(|&(_, _, w)| w).sum::<f64>();
    if m <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    let mut inside = vec![0.0; c.cluster_count()];
    let mut degree = vec![0.0; c.cluster_count()];
    for &(a, b, w) in g.edges() {
        let (la, lb) = (c.label(a) as usize, c.label(b) as usize);
        if la == lb {
            inside[la] += 2.0 * w;
        }
        degree[la] += w;
        degree[lb] += w;
    }
    Ok(inside
        .iter()
        .zip(&degree)
        .map(|(&w, &k)| w / m - (k / m) * (k / m))
        .sum())
}
