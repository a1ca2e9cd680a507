use super::graph::{Clustering, WeightedGraph};
use super::union_find::DisjointSet;
use crate::complex::VertexBirth;

/// Connected components of the graph keeping edges with `1 - ω <= eps`:
/// the components of the Vietoris-Rips complex at scale `eps`.
pub fn threshold_clusters(g: &WeightedGraph, eps: f64) -> Clustering {
    let mut ds = DisjointSet::new(g.vertex_count());
    for &(a, b, w) in g.edges() {
        if 1.0 - w <= eps {
            ds.union(a as usize, b as usize);
        }
    }
    Clustering::from_labels(&ds.roots())
}

/// Clustering by persistence with vertices born at their cheapest edge.
///
/// See [`persistence_clusters_with`].
pub fn persistence_clusters(g: &WeightedGraph, tau: f64) -> Clustering {
    persistence_clusters_with(g, tau, VertexBirth::FirstEdge)
}

/// Clustering by merge persistence.
///
/// Edges are processed by increasing dissimilarity `d = 1 - ω` (ties in
/// `(i, j)` order). A component is born with its oldest vertex. When an edge
/// would join two components, the younger one (later birth) would die at
/// `d` after living `d - birth`; the merge is accepted only if that lifetime
/// is at most `tau`. Rejected merges are never revisited: later edges
/// between the same components come at larger `d` against births that can
/// only decrease.
pub fn persistence_clusters_with(g: &WeightedGraph, tau: f64, births: VertexBirth) -> Clustering {
    run_merges(g, births, |lifetime| lifetime <= tau).0
}

/// Lifetimes of all merges under `tau = ∞`, sorted and deduplicated. These
/// are the dimension-0 bar lengths of the filtration and make a natural
/// grid of persistence thresholds.
pub fn merge_lifetimes(g: &WeightedGraph, births: VertexBirth) -> Vec<f64> {
    let mut ls = run_merges(g, births, |_| true).1;
    ls.sort_by(f64::total_cmp);
    ls.dedup();
    ls
}

fn run_merges(
    g: &WeightedGraph,
    births: VertexBirth,
    mut accept: impl FnMut(f64) -> bool,
) -> (Clustering, Vec<f64>) {
    let dg = g.to_dissimilarity();
    let mut birth = dg.vertex_births(births);
    let mut ds = DisjointSet::new(g.vertex_count());
    let mut lifetimes = Vec::new();
    for (a, b, d) in g.edges_by_dissimilarity() {
        let (ra, rb) = (ds.find(a as usize), ds.find(b as usize));
        if ra == rb {
            continue;
        }
        let lifetime = d - birth[ra].max(birth[rb]);
        if accept(lifetime) {
            lifetimes.push(lifetime);
            let elder = birth[ra].min(birth[rb]);
            let root = ds.union(ra, rb).expect("distinct roots");
            birth[root] = elder;
        }
    }
    (Clustering::from_labels(&ds.roots()), lifetimes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_extremes() {
        let g = WeightedGraph::from_edges(4, [(0, 1, 0.9), (1, 2, 0.5), (2, 3, 0.2)]).unwrap();
        assert_eq!(threshold_clusters(&g, 0.0).cluster_count(), 4);
        assert_eq!(threshold_clusters(&g, 1.0).cluster_count(), 1);
        let mid = threshold_clusters(&g, 0.5);
        assert_eq!(mid.labels(), &[0, 0, 0, 1]);
    }

    #[test]
    fn cat_dog() {
        let g = WeightedGraph::from_edges(2, [(0, 1, 0.4)]).unwrap();
        assert!(threshold_clusters(&g, 0.7).same_cluster(0, 1));
        assert!(!threshold_clusters(&g, 0.5).same_cluster(0, 1));
    }

    #[test]
    fn hand_traced_path_at_zero_threshold() {
        // a-b d=0.1, b-c d=0.5, c-d d=0.2
        // births: a .1, b .1, c .2, d .2
        // a-b: lifetime .1-.1 = 0 -> merge; c-d: 0 -> merge;
        // b-c: {a,b} born .1, {c,d} born .2, lifetime .5-.2 = .3 -> reject
        let g = WeightedGraph::from_edges(4, [(0, 1, 0.9), (1, 2, 0.5), (2, 3, 0.8)]).unwrap();
        let c = persistence_clusters(&g, 0.0);
        assert_eq!(c.labels(), &[0, 0, 1, 1]);
        assert_eq!(persistence_clusters(&g, 0.29).cluster_count(), 2);
        assert_eq!(persistence_clusters(&g, 0.31).cluster_count(), 1);
    }

    #[test]
    fn bridged_tight_pairs() {
        // intra d = 0.1, bridge d = 0.9: bridge lifetime 0.8 > 0.3
        let g = WeightedGraph::from_edges(4, [(0, 1, 0.9), (2, 3, 0.9), (1, 2, 0.1)]).unwrap();
        let c = persistence_clusters(&g, 0.3);
        assert_eq!(c.cluster_count(), 2);
        assert_eq!(c.labels(), &[0, 0, 1, 1]);
    }

    #[test]
    fn large_tau_matches_full_threshold() {
        let g = WeightedGraph::from_edges(5, [(0, 1, 0.9), (1, 2, 0.1), (3, 4, 0.4)]).unwrap();
        assert_eq!(persistence_clusters(&g, 1.0), threshold_clusters(&g, 1.0));
    }

    #[test]
    fn zero_births_reduce_to_threshold() {
        let g = WeightedGraph::from_edges(5, [(0, 1, 0.9), (1, 2, 0.3), (2, 3, 0.6), (3, 4, 0.45)]).unwrap();
        for tau in [0.0, 0.1, 0.4, 0.55, 0.7, 1.0] {
            assert_eq!(
                persistence_clusters_with(&g, tau, VertexBirth::Zero),
                threshold_clusters(&g, tau),
                "tau={tau}"
            );
        }
    }

    #[test]
    fn lifetimes_grid() {
        let g = WeightedGraph::from_edges(4, [(0, 1, 0.9), (1, 2, 0.5), (2, 3, 0.8)]).unwrap();
        let ls = merge_lifetimes(&g, VertexBirth::FirstEdge);
        assert_eq!(ls.len(), 2);
        assert_eq!(ls[0], 0.0);
        assert!((ls[1] - 0.3).abs() < 1e-12);
    }
}
