//! Sweeps all three clustering methods over a synthetic corpus with planted
//! clusters and reports the best modularity each reaches.
//!
//! `cargo run --release --example synthetic_sweeps [seed]`

use std::time::Instant;

use wordtopo::clustering::{linear_grid, sweep, Clustering, MclParams, Method};
use wordtopo::synthetic::{SyntheticConfig, SyntheticCorpus};

fn main() -> wordtopo::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let config = SyntheticConfig {
        seed: seed.unwrap_or(SyntheticConfig::default().seed),
        ..Default::default()
    };
    let synth = SyntheticCorpus::generate(&config);
    let corpus = synth.corpus()?;
    let g = corpus.to_weighted_graph();
    println!(
        "{} words, {} associated pairs, {} planted clusters (seed {:#x})",
        corpus.word_count(),
        corpus.pair_count(),
        config.clusters,
        config.seed
    );

    // Planted labels in corpus id order, as a reference point.
    let keys: Vec<usize> = corpus
        .words()
        .iter()
        .map(|w| synth.planted[synth.words.iter().position(|x| x == w).expect("known word")])
        .collect();
    let planted = Clustering::from_labels(&keys);
    println!(
        "planted partition: Q={:.4}",
        wordtopo::clustering::modularity(&g, &planted)?
    );

    let mcl = Method::Mcl(MclParams::default());
    for (method, grid) in [
        (Method::Threshold, Method::Threshold.default_grid(&g)),
        (Method::Persistence, Method::Persistence.default_grid(&g)),
        (mcl, linear_grid(1.2, 6.0, 0.1)?),
    ] {
        let start = Instant::now();
        let table = sweep(&g, method, &grid, None)?;
        let best = table.argmax().expect("nonempty grid");
        println!(
            "{:<12} {:>4} points  best Q={:.4} at {} with {} clusters  ({:.2?})",
            method.name(),
            grid.len(),
            best.modularity,
            best.param,
            best.clusters,
            start.elapsed()
        );
    }
    Ok(())
}
