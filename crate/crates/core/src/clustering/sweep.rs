use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use super::graph::{Clustering, WeightedGraph};
use super::mcl::{mcl, MclParams};
use super::modularity::modularity;
use super::threshold::{merge_lifetimes, persistence_clusters, threshold_clusters};
use crate::complex::VertexBirth;
use crate::error::{Error, Result};

/// A clustering method with its free parameter left open.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    /// Parameter: scale `eps`.
    Threshold,
    /// Parameter: persistence threshold `tau`.
    Persistence,
    /// Parameter: inflation. Other settings are fixed.
    Mcl(MclParams),
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Threshold => "threshold",
            Method::Persistence => "persistence",
            Method::Mcl(_) => "mcl",
        }
    }

    /// Runs the method at one parameter value. The flag is MCL's
    /// convergence; the other methods always report `true`.
    pub fn cluster(&self, g: &WeightedGraph, param: f64) -> Result<(Clustering, bool)> {
        match self {
            Method::Threshold => Ok((threshold_clusters(g, param), true)),
            Method::Persistence => Ok((persistence_clusters(g, param), true)),
            Method::Mcl(p) => {
                let r = mcl(g, &p.with_inflation(param))?;
                Ok((r.clustering, r.converged))
            }
        }
    }

    /// The grid swept when the caller gives none: `0` plus every edge
    /// dissimilarity for thresholds, `0` plus every merge lifetime for
    /// persistence, and inflation `1.20, 1.22, …, 6.00` for MCL.
    pub fn default_grid(&self, g: &WeightedGraph) -> Vec<f64> {
        match self {
            Method::Threshold => {
                let mut grid = vec![0.0];
                grid.extend(g.to_dissimilarity().event_points());
                grid.dedup();
                grid
            }
            Method::Persistence => {
                let mut grid = vec![0.0];
                grid.extend(merge_lifetimes(g, VertexBirth::FirstEdge));
                grid.dedup();
                grid
            }
            Method::Mcl(_) => linear_grid(1.2, 6.0, 0.02).expect("valid constant grid"),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Mcl(p) => write!(
                f,
                "mcl expansion={} prune={} max_iter={} tol={} self_loop={:?}",
                p.expansion, p.prune, p.max_iter, p.tol, p.self_loop
            ),
            other => f.write_str(other.name()),
        }
    }
}

/// `start, start+step, …` up to `stop` inclusive, rounded to 1e-9 so that
/// decimal steps print cleanly.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::InvalidParameter(format!("bad grid {start}:{stop}:{step}")));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n)
        .map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9)
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub modularity: f64,
    pub clusters: usize,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub method: Method,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// The first row with the largest modularity.
    pub fn argmax(&self) -> Option<&SweepRow> {
        self.rows
            .iter()
            .fold(None, |best: Option<&SweepRow>, r| match best {
                Some(b) if b.modularity >= r.modularity => Some(b),
                _ => Some(r),
            })
    }

    /// Writes `param <TAB> Q <TAB> clusters` rows and a closing
    /// `# argmax param=… Q=…` line.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.rows {
            writeln!(w, "{}\t{}\t{}", r.param, r.modularity, r.clusters)?;
        }
        if let Some(best) = self.argmax() {
            writeln!(
                w,
                "# argmax param={} Q={} clusters={}",
                best.param, best.modularity, best.clusters
            )?;
        }
        Ok(())
    }
}

/// Runs `method` at every grid value and scores each clustering.
///
/// Grid points are independent and run on up to `jobs` threads (all
/// available when `None`); rows come back in grid order either way.
pub fn sweep(g: &WeightedGraph, method: Method, grid: &[f64], jobs: Option<usize>) -> Result<SweepTable> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty parameter grid".into()));
    }
    let run = || -> Result<Vec<SweepRow>> {
        grid.par_iter()
            .map(|&param| {
                let (c, converged) = method.cluster(g, param)?;
                Ok(SweepRow {
                    param,
                    modularity: modularity(g, &c)?,
                    clusters: c.cluster_count(),
                    converged,
                })
            })
            .collect()
    };
    let rows = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(SweepTable { method, rows })
}
