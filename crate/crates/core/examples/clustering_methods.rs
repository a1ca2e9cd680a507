//! Threshold, persistence and Markov clustering of a small association
//! graph, each scored by modularity.

use wordtopo::clustering::{
    mcl, modularity, persistence_clusters, threshold_clusters, Clustering, MclParams, WeightedGraph,
};

fn main() -> wordtopo::Result<()> {
    let words = ["CAT", "DOG", "MOUSE", "CHEESE", "RED", "BLUE", "GREEN", "SKY"];
    let g = WeightedGraph::from_edges(
        words.len(),
        [
            (0, 1, 0.9),
            (0, 2, 0.7),
            (1, 2, 0.4),
            (2, 3, 0.6),
            (4, 5, 0.8),
            (4, 6, 0.7),
            (5, 6, 0.6),
            (5, 7, 0.5),
            (3, 4, 0.05),
        ],
    )?;

    for eps in [0.2, 0.5, 0.96] {
        show(
            &format!("threshold eps={eps}"),
            &g,
            &threshold_clusters(&g, eps),
            &words,
        )?;
    }
    for tau in [0.0, 0.3, 1.0] {
        show(
            &format!("persistence tau={tau}"),
            &g,
            &persistence_clusters(&g, tau),
            &words,
        )?;
    }
    for inflation in [1.4, 2.0, 4.0] {
        let r = mcl(&g, &MclParams::default().with_inflation(inflation))?;
        let label = format!("mcl inflation={inflation} ({} iterations)", r.iterations);
        show(&label, &g, &r.clustering, &words)?;
    }
    Ok(())
}

fn show(label: &str, g: &WeightedGraph, c: &Clustering, words: &[&str]) -> wordtopo::Result<()> {
    let groups: Vec<String> = c
        .clusters()
        .iter()
        .map(|m| m.iter().map(|&v| words[v as usize]).collect::<Vec<_>>().join(" "))
        .collect();
    println!(
        "{label:<40} Q={:.4}  {{{}}}",
        modularity(g, c)?,
        groups.join("} {")
    );
    Ok(())
}
