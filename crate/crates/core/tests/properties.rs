use std::collections::BTreeSet;

use proptest::prelude::*;
use wordtopo::algebra::{Chain, Field, Simplex, Vertex};
use wordtopo::clustering::{
    mcl, merge_lifetimes, modularity, threshold_clusters, Clustering, MclParams, WeightedGraph,
};
use wordtopo::complex::{build_vr_filtration, DissimilarityGraph, Filtration, VertexBirth, VrOptions};
use wordtopo::ingest::AssociationCorpus;
use wordtopo::persistence::{betti_numbers, reduce, Barcode};

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|p| Field::new(p).unwrap())
}

/// A chain of dimension `dim` on vertices `0..8` with random orientations.
fn chain(dim: usize, f: Field) -> impl Strategy<Value = Chain> {
    let term = (
        -9i64..=9,
        Just((0..8u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |v| v[..=dim].to_vec()),
    );
    prop::collection::vec(term, 0..6).prop_map(move |ts| {
        Chain::from_oriented(dim, ts.iter().map(|(c, v)| (*c, v.as_slice())), &f).unwrap()
    })
}

fn chains3() -> impl Strategy<Value = (Field, Chain, Chain, Chain)> {
    (field(), 0usize..4).prop_flat_map(|(f, d)| (Just(f), chain(d, f), chain(d, f), chain(d, f)))
}

/// Edge weights on a coarse grid so that ties are common.
fn weighted_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|i| (i + 1..n as Vertex).map(move |j| (i, j)))
            .collect();
        prop::collection::vec(prop::option::weighted(0.5, 1u32..=20), pairs.len()).prop_map(move |ws| {
            let edges = pairs
                .iter()
                .zip(ws)
                .filter_map(|(&(i, j), w)| w.map(|w| (i, j, w as f64 / 20.0)));
            WeightedGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn dissimilarity_graph(max_n: usize) -> impl Strategy<Value = DissimilarityGraph> {
    weighted_graph(max_n).prop_map(|g| g.to_dissimilarity())
}

fn labels(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..n as u32, n)
}

fn triples(b: &Barcode) -> Vec<(usize, f64, f64)> {
    b.intervals().iter().map(|i| (i.dim, i.birth, i.death)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn boundary_of_boundary_vanishes((f, a, _, _) in chains3()) {
        prop_assert!(a.boundary(&f).boundary(&f).is_zero());
    }

    #[test]
    fn chains_form_an_abelian_group((f, a, b, c) in chains3()) {
        prop_assert_eq!(a.add(&b, &f).unwrap(), b.add(&a, &f).unwrap());
        prop_assert_eq!(
            a.add(&b, &f).unwrap().add(&c, &f).unwrap(),
            a.add(&b.add(&c, &f).unwrap(), &f).unwrap()
        );
        prop_assert!(a.add(&a.negate(&f), &f).unwrap().is_zero());
        prop_assert_eq!(a.sub(&b, &f).unwrap(), a.add(&b.negate(&f), &f).unwrap());
        let lhs = a.add(&b, &f).unwrap().boundary(&f);
        prop_assert_eq!(lhs, a.boundary(&f).add(&b.boundary(&f), &f).unwrap());
        prop_assert_eq!(a.scale(2, &f), a.add(&a, &f).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(vs in Just((0..10u32).collect::<Vec<_>>()).prop_shuffle(), len in 1usize..6, i in 0usize..6, j in 0usize..6) {
        let vs = &vs[..len];
        let (s, sign) = Simplex::canonicalize(vs).unwrap();
        prop_assert_eq!(Simplex::canonicalize(s.vertices()).unwrap(), (s.clone(), 1));
        let (i, j) = (i % len, j % len);
        if i != j {
            let mut swapped = vs.to_vec();
            swapped.swap(i, j);
            prop_assert_eq!(Simplex::canonicalize(&swapped).unwrap(), (s, -sign));
        }
    }

    #[test]
    fn vr_matches_brute_force_cliques(g in dissimilarity_graph(7), max_eps in 0.0f64..=1.0) {
        let opts = VrOptions { max_dim: 3, max_eps, vertex_birth: VertexBirth::Zero };
        let filt = build_vr_filtration(&g, &opts);
        let n = g.vertex_count() as u32;
        let mut expect = BTreeSet::new();
        for mask in 1u32..1 << n {
            let vs: Vec<u32> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if vs.len() > 4 {
                continue;
            }
            let mut birth = 0.0f64;
            let mut clique = true;
            for (x, &a) in vs.iter().enumerate() {
                for &b in &vs[x + 1..] {
                    match g.get(a, b) {
                        Some(d) => birth = birth.max(d),
                        None => clique = false,
                    }
                }
            }
            if clique && birth <= max_eps {
                expect.insert((vs, birth.to_bits()));
            }
        }
        let got: BTreeSet<(Vec<u32>, u64)> =
            filt.entries().iter().map(|e| (e.simplex.vertices().to_vec(), e.birth.to_bits())).collect();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn vr_is_deterministic_and_round_trips(g in dissimilarity_graph(8)) {
        let opts = VrOptions::default();
        let a = build_vr_filtration(&g, &opts);
        let b = build_vr_filtration(&g, &opts);
        let (mut ta, mut tb) = (Vec::new(), Vec::new());
        a.write_tsv(&mut ta).unwrap();
        b.write_tsv(&mut tb).unwrap();
        prop_assert_eq!(&ta, &tb);
        let back = Filtration::read_tsv(&ta[..]).unwrap();
        prop_assert_eq!(back.entries(), a.entries());
    }

    #[test]
    fn euler_characteristic(g in dissimilarity_graph(7), f in field()) {
        let opts = VrOptions { max_dim: 6, ..Default::default() };
        let k = build_vr_filtration(&g, &opts).complex_at(1.0);
        let top = k.iter().map(Simplex::dim).max().unwrap_or(0);
        let betti = betti_numbers(&k, top, f).unwrap();
        let alt = |xs: &mut dyn Iterator<Item = (usize, i64)>| xs.map(|(d, x)| if d % 2 == 0 { x } else { -x }).sum::<i64>();
        let chi_cells = alt(&mut k.iter().map(|s| (s.dim(), 1)));
        let chi_betti = alt(&mut betti.iter().enumerate().map(|(d, &b)| (d, b as i64)));
        prop_assert_eq!(chi_cells, chi_betti);
    }

    #[test]
    fn zero_dim_barcode_ignores_the_field(g in dissimilarity_graph(9)) {
        let filt = build_vr_filtration(&g, &VrOptions { max_dim: 1, ..Default::default() });
        let z2 = triples(&reduce(&filt, Field::z2()).barcode(0));
        for p in [3, 5, 7] {
            prop_assert_eq!(&triples(&reduce(&filt, Field::new(p).unwrap()).barcode(0)), &z2);
        }
    }

    #[test]
    fn elder_rule_for_components(g in dissimilarity_graph(9)) {
        let filt = build_vr_filtration(&g, &VrOptions { max_dim: 1, vertex_birth: VertexBirth::FirstEdge, ..Default::default() });
        let bars: Vec<_> = reduce(&filt, Field::z2()).barcode(0).dim(0).cloned().collect();
        prop_assert_eq!(bars.len(), g.vertex_count());
        let edge_births: BTreeSet<u64> = g.edges().map(|e| e.2.to_bits()).collect();
        let births = g.vertex_births(VertexBirth::FirstEdge);
        let oldest = births.iter().copied().fold(f64::INFINITY, f64::min);
        for b in &bars {
            prop_assert!(births.contains(&b.birth));
            if !b.is_essential() {
                prop_assert!(edge_births.contains(&b.death.to_bits()));
            }
        }
        // The oldest vertex always survives.
        prop_assert!(bars.iter().any(|b| b.is_essential() && b.birth == oldest));
    }

    #[test]
    fn merge_lifetimes_are_component_bar_lengths(g in weighted_graph(9)) {
        let dg = g.to_dissimilarity();
        let filt = build_vr_filtration(&dg, &VrOptions { max_dim: 1, vertex_birth: VertexBirth::FirstEdge, ..Default::default() });
        let mut lengths: Vec<f64> = reduce(&filt, Field::z2())
            .barcode(0)
            .dim(0)
            .filter(|b| !b.is_essential())
            .map(|b| b.persistence())
            .collect();
        lengths.sort_by(f64::total_cmp);
        lengths.dedup();
        prop_assert_eq!(merge_lifetimes(&g, VertexBirth::FirstEdge), lengths);
    }

    #[test]
    fn threshold_clusterings_refine(g in weighted_graph(10), a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assert!(threshold_clusters(&g, lo).refines(&threshold_clusters(&g, hi)));
    }

    #[test]
    fn singleton_modularity_closed_form(g in weighted_graph(10)) {
        prop_assume!(g.edge_count() > 0);
        let k = g.degrees();
        let m: f64 = k.iter().sum();
        let expect = -k.iter().map(|x| (x / m) * (x / m)).sum::<f64>();
        let q = modularity(&g, &Clustering::singletons(g.vertex_count())).unwrap();
        prop_assert!((q - expect).abs() < 1e-12);
    }

    #[test]
    fn modularity_ignores_label_names(g in weighted_graph(10), ls in labels(10), shift in 1u32..50) {
        prop_assume!(g.edge_count() > 0);
        let ls = &ls[..g.vertex_count()];
        let renamed: Vec<u32> = ls.iter().map(|&l| (l + shift) * 7 % 101).collect();
        let q = modularity(&g, &Clustering::from_labels(ls)).unwrap();
        prop_assert!((-0.5 - 1e-12..=1.0).contains(&q));
        prop_assert_eq!(q, modularity(&g, &Clustering::from_labels(&renamed)).unwrap());
    }

    #[test]
    fn mcl_ignores_uniform_scaling(g in weighted_graph(9), inflation in 1.3f64..4.0) {
        prop_assume!(g.edge_count() > 0);
        let params = MclParams::default().with_inflation(inflation);
        let base = mcl(&g, &params).unwrap().clustering;
        for factor in [0.5, 0.25] {
            prop_assert_eq!(&mcl(&g.scaled(factor).unwrap(), &params).unwrap().clustering, &base);
        }
    }

    #[test]
    fn barcode_tsv_round_trips(g in dissimilarity_graph(8)) {
        let b = reduce(&build_vr_filtration(&g, &VrOptions::default()), Field::z2()).barcode(2);
        let mut out = Vec::new();
        b.write_tsv(&mut out, true).unwrap();
        prop_assert_eq!(triples(&Barcode::read_tsv(&out[..]).unwrap()), triples(&b));
    }

    #[test]
    fn edge_list_round_trips(g in weighted_graph(10)) {
        let mut corpus = AssociationCorpus::new();
        for &(a, b, w) in g.edges() {
            corpus.associate(&format!("w{a}"), &format!("w{b}"), w).unwrap();
        }
        let mut out = Vec::new();
        corpus.write_edge_list(&mut out).unwrap();
        prop_assert_eq!(AssociationCorpus::parse_edge_list(&out[..]).unwrap(), corpus);
    }
}
