//! Seeded synthetic word-association data with planted clusters.
//!
//! Every word is a stimulus answered by a fixed number of respondents. Its
//! responses fall mostly inside its own planted cluster, with a Zipf-like
//! spread of response shares whose steepness varies from word to word. The
//! result is emitted as stimulus-count rows, so it passes through the same
//! parser as real data.

use std::collections::BTreeSet;
use std::io::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ingest::AssociationCorpus;

#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticConfig {
    pub words: usize,
    pub clusters: usize,
    pub respondents: u32,
    /// Inclusive range of distinct responses per stimulus.
    pub responses: (usize, usize),
    /// Inclusive range of the per-cluster probability that a response stays
    /// inside the stimulus's cluster.
    pub cohesion: (f64, f64),
    /// Inclusive range of the Zipf exponent shaping response shares.
    pub zipf: (f64, f64),
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        Self {
            words: 500,
            clusters: 25,
            respondents: 100,
            responses: (4, 12),
            cohesion: (0.55, 0.95),
            zipf: (0.6, 2.2),
            seed: 0x5eed_2024,
        }
    }
}

/// One stimulus-count row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub stimulus: String,
    pub response: String,
    pub count: u32,
    pub total: u32,
}

#[derive(Clone, Debug)]
pub struct SyntheticCorpus {
    pub config: SyntheticConfig,
    /// Planted cluster of each word, indexed like `words`.
    pub planted: Vec<usize>,
    pub words: Vec<String>,
    pub rows: Vec<CountRow>,
}

impl SyntheticCorpus {
    pub fn generate(config: &SyntheticConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let n = config.words;
        let words: Vec<String> = (0..n).map(|i| format!("W{i:04}")).collect();
        let planted: Vec<usize> = (0..n).map(|i| i % config.clusters.max(1)).collect();
        let mut members = vec![Vec::new(); config.clusters.max(1)];
        for (i, &c) in planted.iter().enumerate() {
            members[c].push(i);
        }
        let cohesion: Vec<f64> = (0..members.len())
            .map(|_| rng.gen_range(config.cohesion.0..=config.cohesion.1))
            .collect();

        let mut rows = Vec::new();
        for stim in 0..n {
            let c = planted[stim];
            let k = rng.gen_range(config.responses.0..=config.responses.1);
            let mut chosen: BTreeSet<usize> = BTreeSet::new();
            let mut ordered = Vec::with_capacity(k);
            let mut attempts = 0;
            while ordered.len() < k && attempts < 50 * k {
                attempts += 1;
                let r = if rng.gen_bool(cohesion[c]) {
                    *members[c].choose(&mut rng).expect("nonempty cluster")
                } else {
                    rng.gen_range(0..n)
                };
                if r != stim && chosen.insert(r) {
                    ordered.push(r);
                }
            }
            let s = rng.gen_range(config.zipf.0..=config.zipf.1);
            let weights: Vec<f64> = (0..ordered.len())
                .map(|r| 1.0 / ((r + 1) as f64).powf(s))
                .collect();
            let wsum: f64 = weights.iter().sum();
            for (resp, w) in ordered.into_iter().zip(weights) {
                let count = ((w / wsum) * config.respondents as f64).round().max(1.0) as u32;
                rows.push(CountRow {
                    stimulus: words[stim].clone(),
                    response: words[resp].clone(),
                    count: count.min(config.respondents),
                    total: config.respondents,
                });
            }
        }
        Self {
            config: config.clone(),
            planted,
            words,
            rows,
        }
    }

    pub fn write_counts<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.rows {
            writeln!(w, "{}\t{}\t{}\t{}", r.stimulus, r.response, r.count, r.total)?;
        }
        Ok(())
    }

    /// The corpus as parsed from its own stimulus-count rows.
    pub fn corpus(&self) -> Result<AssociationCorpus> {
        let mut buf = Vec::new();
        self.write_counts(&mut buf)?;
        AssociationCorpus::parse_stimulus_counts(&buf[..])
    }
}
