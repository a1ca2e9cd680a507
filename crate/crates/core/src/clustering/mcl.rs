//! Markov Clustering.
//!
//! The walk matrix is kept column-stochastic and sparse (one sorted column
//! per vertex). Each round raises it to the expansion power, applies the
//! entrywise inflation power, renormalizes, then prunes small entries and
//! renormalizes again. Columns are independent within a round, so they are
//! computed in parallel; the arithmetic per column is fixed, which keeps
//! results independent of scheduling.

use rayon::prelude::*;

use super::graph::{Clustering, WeightedGraph};
use super::union_find::DisjointSet;
use crate::error::{Error, Result};

type SparseCol = Vec<(u32, f64)>;

/// Self-loop weight added to every vertex before normalizing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SelfLoop {
    /// Weight 1 on every vertex.
    Unit,
    /// The vertex's largest incident weight (1 for isolated vertices). Keeps
    /// the result unchanged when all weights are scaled uniformly.
    #[default]
    ColumnMax,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MclParams {
    pub inflation: f64,
    pub expansion: u32,
    pub prune: f64,
    pub max_iter: usize,
    pub tol: f64,
    pub self_loop: SelfLoop,
}

impl Default for MclParams {
    fn default() -> Self {
        Self {
            inflation: 2.0,
            expansion: 2,
            prune: 1e-5,
            max_iter: 200,
            tol: 1e-8,
            self_loop: SelfLoop::default(),
        }
    }
}

impl MclParams {
    pub fn with_inflation(self, inflation: f64) -> Self {
        Self { inflation, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !self.inflation.is_finite() || self.inflation <= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "inflation must be > 1, got {}",
                self.inflation
            )));
        }
        if self.expansion < 2 {
            return Err(Error::InvalidParameter(format!(
                "expansion must be >= 2, got {}",
                self.expansion
            )));
        }
        if !(0.0..1.0).contains(&self.prune) {
            return Err(Error::InvalidParameter(format!(
                "prune must be in [0, 1), got {}",
                self.prune
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tol must be > 0, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MclResult {
    pub clustering: Clustering,
    /// False when `max_iter` was reached before the matrix settled.
    pub converged: bool,
    pub iterations: usize,
}

pub fn mcl(g: &WeightedGraph, params: &MclParams) -> Result<MclResult> {
    params.validate()?;
    let n = g.vertex_count();
    let mut m = initial_matrix(g, params.self_loop);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < params.max_iter {
        iterations += 1;
        let mut next = m.clone();
        for _ in 1..params.expansion {
            next = multiply(&m, &next, n);
        }
        next.par_iter_mut().for_each(|col| {
            inflate(col, params.inflation);
            prune(col, params.prune);
        });
        let change = next
            .par_iter()
            .zip(m.par_iter())
            .map(|(a, b)| max_abs_diff(a, b))
            .reduce(|| 0.0, f64::max);
        m = next;
        if change < params.tol {
            converged = true;
            break;
        }
    }
    Ok(MclResult {
        clustering: interpret(&m),
        converged,
        iterations,
    })
}

fn initial_matrix(g: &WeightedGraph, self_loop: SelfLoop) -> Vec<SparseCol> {
    let mut cols = g.adjacency();
    for (v, col) in cols.iter_mut().enumerate() {
        let loop_weight = match self_loop {
            SelfLoop::Unit => 1.0,
            SelfLoop::ColumnMax => col.iter().map(|&(_, w)| w).fold(0.0, f64::max),
        };
        let loop_weight = if loop_weight > 0.0 { loop_weight } else { 1.0 };
        let pos = col.partition_point(|&(u, _)| (u as usize) < v);
        col.insert(pos, (v as u32, loop_weight));
        normalize(col);
    }
    cols
}

fn normalize(col: &mut SparseCol) {
    let sum: f64 = col.iter().map(|&(_, x)| x).sum();
    if sum > 0.0 {
        for (_, x) in col.iter_mut() {
            *x /= sum;
        }
    }
}

/// `a · b`, both column-major.
fn multiply(a: &[SparseCol], b: &[SparseCol], n: usize) -> Vec<SparseCol> {
    b.par_iter()
        .map_init(
            || (vec![0.0f64; n], Vec::<u32>::new()),
            |(acc, touched), bcol| {
                for &(k, bkj) in bcol {
                    for &(i, aik) in &a[k as usize] {
                        if acc[i as usize] == 0.0 {
                            touched.push(i);
                        }
                        acc[i as usize] += aik * bkj;
                    }
                }
                touched.sort_unstable();
                let col: SparseCol = touched
                    .iter()
                    .map(|&i| (i, std::mem::take(&mut acc[i as usize])))
                    .filter(|&(_, x)| x > 0.0)
                    .collect();
                touched.clear();
                col
            },
        )
        .collect()
}

fn inflate(col: &mut SparseCol, r: f64) {
    for (_, x) in col.iter_mut() {
        *x = x.powf(r);
    }
    normalize(col);
}

fn prune(col: &mut SparseCol, threshold: f64) {
    let max = col.iter().map(|&(_, x)| x).fold(0.0, f64::max);
    col.retain(|&(_, x)| x >= threshold || x == max);
    normalize(col);
}

fn max_abs_diff(a: &SparseCol, b: &SparseCol) -> f64 {
    let (mut i, mut j) = (0, 0);
    let mut worst: f64 = 0.0;
    while i < a.len() || j < b.len() {
        let d = match (a.get(i), b.get(j)) {
            (Some(&(ra, xa)), Some(&(rb, xb))) if ra == rb => {
                i += 1;
                j += 1;
                (xa - xb).abs()
            }
            (Some(&(ra, xa)), Some(&(rb, _))) if ra < rb => {
                i += 1;
                xa
            }
            (Some(&(_, xa)), None) => {
                i += 1;
                xa
            }
            (_, Some(&(_, xb))) => {
                j += 1;
                xb
            }
            (None, None) => unreachable!(),
        };
        worst = worst.max(d);
    }
    worst
}

/// Reads clusters off the limit matrix.
///
/// Attractors are vertices that keep mass on themselves. Attractors flowing
/// into each other form one system; every other vertex joins the system of
/// the lowest-numbered attractor it flows to.
fn interpret(m: &[SparseCol]) -> Clustering {
    let n = m.len();
    let is_attractor: Vec<bool> = (0..n)
        .map(|v| m[v].iter().any(|&(i, x)| i as usize == v && x > 0.0))
        .collect();
    let mut ds = DisjointSet::new(n);
    for (a, col) in m.iter().enumerate() {
        if !is_attractor[a] {
            continue;
        }
        for &(i, _) in col {
            if is_attractor[i as usize] {
                ds.union(a, i as usize);
            }
        }
    }
    let keys: Vec<usize> = (0..n)
        .map(|v| {
            if is_attractor[v] {
                return ds.find(v);
            }
            match m[v].iter().find(|&&(i, _)| is_attractor[i as usize]) {
                Some(&(i, _)) => ds.find(i as usize),
                None => v,
            }
        })
        .collect();
    Clustering::from_labels(&keys)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cliques(bridge: f64) -> WeightedGraph {
        let mut edges = Vec::new();
        for base in [0u32, 5] {
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((base + i, base + j, 1.0));
                }
            }
        }
        edges.push((4, 5, bridge));
        WeightedGraph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn separates_weakly_bridged_cliques() {
        let g = two_cliques(0.05);
        for inflation in [1.5, 2.0, 2.5, 3.0] {
            let r = mcl(&g, &MclParams::default().with_inflation(inflation)).unwrap();
            assert!(r.converged, "inflation {inflation}");
            assert_eq!(r.clustering.labels(), &[0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        }
    }

    #[test]
    fn single_edge_one_cluster() {
        let g = WeightedGraph::from_edges(2, [(0, 1, 0.7)]).unwrap();
        for inflation in [1.1, 2.0, 4.0, 6.0] {
            let r = mcl(&g, &MclParams::default().with_inflation(inflation)).unwrap();
            assert_eq!(r.clustering.cluster_count(), 1, "inflation {inflation}");
        }
    }

    #[test]
    fn isolated_vertices_are_singletons() {
        let g = WeightedGraph::from_edges(4, [(0, 1, 1.0)]).unwrap();
        let r = mcl(&g, &MclParams::default()).unwrap();
        assert_eq!(r.clustering.labels(), &[0, 0, 1, 2]);
    }

    #[test]
    fn invalid_params() {
        let g = two_cliques(0.05);
        assert!(mcl(&g, &MclParams::default().with_inflation(1.0)).is_err());
        let p = MclParams {
            expansion: 1,
            ..Default::default()
        };
        assert!(mcl(&g, &p).is_err());
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let g = two_cliques(0.05);
        let p = MclParams {
            max_iter: 1,
            ..Default::default()
        };
        let r = mcl(&g, &p).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 1);
        assert_eq!(r.clustering.len(), 10);
    }

    #[test]
    fn scale_invariant_with_column_max_loops() {
        let g = two_cliques(0.3);
        let a = mcl(&g, &MclParams::default()).unwrap();
        let b = mcl(&g.scaled(0.25).unwrap(), &MclParams::default()).unwrap();
        assert_eq!(a.clustering, b.clustering);
    }
}
