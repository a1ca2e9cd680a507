use std::collections::BTreeMap;
use std::io::Write;

use crate::algebra::Vertex;
use crate::complex::DissimilarityGraph;
use crate::error::{Error, Result};

/// Undirected graph with association weights in `(0, 1]`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    /// `(i, j, ω)` with `i < j`, sorted and unique.
    edges: Vec<(Vertex, Vertex, f64)>,
}

impl WeightedGraph {
    /// Builds the graph; a repeated pair keeps its largest weight.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut map: BTreeMap<(Vertex, Vertex), f64> = BTreeMap::new();
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop on vertex {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if !(w > 0.0 && w <= 1.0) {
                return Err(Error::InvalidParameter(format!("weight {w} outside (0, 1]")));
            }
            let slot = map.entry((a.min(b), a.max(b))).or_insert(w);
            *slot = slot.max(w);
        }
        Ok(Self {
            n,
            edges: map.into_iter().map(|((a, b), w)| (a, b, w)).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex, f64)] {
        &self.edges
    }

    /// Weighted degrees `k_i = Σ_j ω_ij`.
    pub fn degrees(&self) -> Vec<f64> {
        let mut k = vec![0.0; self.n];
        for &(a, b, w) in &self.edges {
            k[a as usize] += w;
            k[b as usize] += w;
        }
        k
    }

    /// Neighbor lists with weights, each sorted by neighbor id.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b, w) in &self.edges {
            adj[a as usize].push((b, w));
            adj[b as usize].push((a, w));
        }
        for list in &mut adj {
            list.sort_by_key(|&(v, _)| v);
        }
        adj
    }

    /// Dissimilarity `1 - ω` per edge.
    pub fn to_dissimilarity(&self) -> DissimilarityGraph {
        DissimilarityGraph::from_edges(self.n, self.edges.iter().map(|&(a, b, w)| (a, b, 1.0 - w)))
            .expect("weights in (0, 1] map into [0, 1)")
    }

    /// Edges as `(i, j, 1 - ω)`, ordered by dissimilarity then `(i, j)`.
    pub(crate) fn edges_by_dissimilarity(&self) -> Vec<(Vertex, Vertex, f64)> {
        let mut es: Vec<_> = self.edges.iter().map(|&(a, b, w)| (a, b, 1.0 - w)).collect();
        es.sort_by(|x, y| x.2.total_cmp(&y.2).then((x.0, x.1).cmp(&(y.0, y.1))));
        es
    }

    /// Same graph with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::from_edges(self.n, self.edges.iter().map(|&(a, b, w)| (a, b, w * factor)))
    }
}

/// A partition of the vertices into labeled clusters `0..count`.
///
/// Labels are assigned in order of each cluster's smallest vertex, so two
/// equal partitions always compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering {
    labels: Vec<u32>,
    count: usize,
}

impl Clustering {
    /// Relabels arbitrary per-vertex keys densely by first appearance.
    pub fn from_labels<T: Ord + Copy>(keys: &[T]) -> Self {
        let mut seen: BTreeMap<T, u32> = BTreeMap::new();
        let mut labels = Vec::with_capacity(keys.len());
        for &k in keys {
            let next = seen.len() as u32;
            labels.push(*seen.entry(k).or_insert(next));
        }
        Self {
            count: seen.len(),
            labels,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n as u32).collect(),
            count: n,
        }
    }

    pub fn single(n: usize) -> Self {
        Self {
            labels: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn cluster_count(&self) -> usize {
        self.count
    }

    pub fn label(&self, v: Vertex) -> u32 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn same_cluster(&self, a: Vertex, b: Vertex) -> bool {
        self.label(a) == self.label(b)
    }

    /// Members of each cluster, in label order.
    pub fn clusters(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(v as Vertex);
        }
        out
    }

    /// Whether every cluster of `self` lies inside one cluster of `coarser`.
    pub fn refines(&self, coarser: &Clustering) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![u32::MAX; self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            let c = coarser.labels[v];
            match image[l as usize] {
                u32::MAX => image[l as usize] = c,
                prev if prev != c => return false,
                _ => {}
            }
        }
        true
    }

    /// Writes `word <TAB> cluster_id` per vertex in id order.
    pub fn write_tsv<W: Write, S: AsRef<str>>(&self, mut w: W, words: &[S]) -> Result<()> {
        if words.len() != self.labels.len() {
            return Err(Error::ClusteringSize {
                found: self.labels.len(),
                expected: words.len(),
            });
        }
        for (word, l) in words.iter().zip(&self.labels) {
            writeln!(w, "{}\t{l}", word.as_ref())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_keep_max_and_bad_weights_fail() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 0.2), (1, 0, 0.3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1, 0.3)]);
        assert!(WeightedGraph::from_edges(2, [(0, 1, 0.0)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(0, 1, 1.5)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(1, 1, 0.5)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(0, 2, 0.5)]).is_err());
    }

    #[test]
    fn dense_labels_by_first_appearance() {
        let c = Clustering::from_labels(&[7, 3, 7, 9, 3]);
        assert_eq!(c.labels(), &[0, 1, 0, 2, 1]);
        assert_eq!(c.cluster_count(), 3);
        assert_eq!(c.clusters(), vec![vec![0, 2], vec![1, 4], vec![3]]);
    }

    #[test]
    fn refinement() {
        let fine = Clustering::from_labels(&[0, 0, 1, 2]);
        let coarse = Clustering::from_labels(&[0, 0, 1, 1]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(Clustering::singletons(4).refines(&fine));
        assert!(fine.refines(&Clustering::single(4)));
    }

    #[test]
    fn tsv_output() {
        let c = Clustering::from_labels(&[1, 1, 2]);
        let mut out = Vec::new();
        c.write_tsv(&mut out, &["CAT", "DOG", "SUN"]).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "CAT\t0\nDOG\t0\nSUN\t1\n");
        assert!(c.write_tsv(Vec::new(), &["CAT"]).is_err());
    }
}
