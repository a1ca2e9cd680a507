use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};

use crate::algebra::Vertex;
use crate::clustering::WeightedGraph;
use crate::complex::DissimilarityGraph;
use crate::error::{Error, Result};

/// Words and the association strength of each associated pair.
///
/// Vertex ids follow first appearance in the input. Equality compares
/// words and strengths by name, so two corpora that differ only in id
/// assignment are equal.
#[derive(Clone, Debug, Default)]
pub struct AssociationCorpus {
    words: Vec<String>,
    index: HashMap<String, Vertex>,
    strengths: BTreeMap<(Vertex, Vertex), f64>,
}

/// Upper-cases and trims a word.
pub fn normalize_word(w: &str) -> String {
    w.trim().to_uppercase()
}

impl AssociationCorpus {
    pub fn new() -> Self {
        Self::default()
    }

    /// Id of `word`, registering it if new. The word must be normalized.
    fn intern(&mut self, word: String) -> Vertex {
        if let Some(&id) = self.index.get(&word) {
            return id;
        }
        let id = self.words.len() as Vertex;
        self.index.insert(word.clone(), id);
        self.words.push(word);
        id
    }

    /// Records an association, keeping the larger strength on repeats.
    /// Zero strengths are ignored.
    pub fn associate(&mut self, a: &str, b: &str, strength: f64) -> Result<()> {
        let (a, b) = (normalize_word(a), normalize_word(b));
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidParameter("empty word".into()));
        }
        if a == b {
            return Err(Error::InvalidParameter(format!("self-association of {a}")));
        }
        if !(0.0..=1.0).contains(&strength) {
            return Err(Error::InvalidParameter(format!(
                "strength {strength} outside (0, 1]"
            )));
        }
        if strength == 0.0 {
            return Ok(());
        }
        let (ia, ib) = (self.intern(a), self.intern(b));
        let slot = self.strengths.entry((ia.min(ib), ia.max(ib))).or_insert(strength);
        *slot = slot.max(strength);
        Ok(())
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn pair_count(&self) -> usize {
        self.strengths.len()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word(&self, id: Vertex) -> Option<&str> {
        self.words.get(id as usize).map(String::as_str)
    }

    pub fn id(&self, word: &str) -> Option<Vertex> {
        self.index.get(&normalize_word(word)).copied()
    }

    pub fn strength(&self, a: &str, b: &str) -> Option<f64> {
        let (ia, ib) = (self.id(a)?, self.id(b)?);
        self.strengths.get(&(ia.min(ib), ia.max(ib))).copied()
    }

    /// `(i, j, s)` with `i < j`, in id order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex, f64)> + '_ {
        self.strengths.iter().map(|(&(a, b), &s)| (a, b, s))
    }

    /// Dissimilarity `1 - s` for every associated pair; unassociated pairs
    /// have no edge.
    pub fn to_dissimilarity(&self) -> DissimilarityGraph {
        DissimilarityGraph::from_edges(self.word_count(), self.pairs().map(|(a, b, s)| (a, b, 1.0 - s)))
            .expect("strengths in (0, 1]")
    }

    pub fn to_weighted_graph(&self) -> WeightedGraph {
        WeightedGraph::from_edges(self.word_count(), self.pairs()).expect("strengths in (0, 1]")
    }

    /// Parses `stimulus <TAB> response <TAB> count <TAB> total` rows.
    ///
    /// Each row gives the proportion `count/total` of respondents answering
    /// `response` to `stimulus`. The strength of an unordered pair is the
    /// larger of its two directed proportions.
    pub fn parse_stimulus_counts<R: BufRead>(r: R) -> Result<Self> {
        let mut directed: BTreeMap<(String, String), usize> = BTreeMap::new();
        let mut corpus = Self::new();
        for_each_row(r, 4, |lineno, f| {
            let count: u64 = f[2]
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad count `{}`", f[2])))?;
            let total: u64 = f[3]
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad total `{}`", f[3])))?;
            if count < 1 {
                return Err(Error::parse(lineno, "count must be at least 1"));
            }
            if count > total {
                return Err(Error::parse(
                    lineno,
                    format!("count {count} exceeds total {total}"),
                ));
            }
            let key = (normalize_word(f[0]), normalize_word(f[1]));
            if let Some(prev) = directed.insert(key.clone(), lineno) {
                return Err(Error::parse(
                    lineno,
                    format!("duplicate pair {} -> {} (first on line {prev})", key.0, key.1),
                ));
            }
            corpus
                .associate(&key.0, &key.1, count as f64 / total as f64)
                .map_err(|e| Error::parse(lineno, e.to_string()))
        })?;
        Ok(corpus)
    }

    /// Parses `word1 <TAB> word2 <TAB> strength` rows. Repeated pairs keep
    /// the larger strength; zero strengths are skipped.
    pub fn parse_edge_list<R: BufRead>(r: R) -> Result<Self> {
        let mut corpus = Self::new();
        for_each_row(r, 3, |lineno, f| {
            let s: f64 = f[2]
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad strength `{}`", f[2])))?;
            corpus
                .associate(f[0], f[1], s)
                .map_err(|e| Error::parse(lineno, e.to_string()))
        })?;
        Ok(corpus)
    }

    /// Writes the edge-list format read by [`Self::parse_edge_list`].
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        for (a, b, s) in self.pairs() {
            writeln!(w, "{}\t{}\t{}", self.words[a as usize], self.words[b as usize], s)?;
        }
        Ok(())
    }

    fn named_pairs(&self) -> BTreeMap<(&str, &str), f64> {
        self.pairs()
            .map(|(a, b, s)| {
                let (x, y) = (self.words[a as usize].as_str(), self.words[b as usize].as_str());
                ((x.min(y), x.max(y)), s)
            })
            .collect()
    }
}

impl PartialEq for AssociationCorpus {
    fn eq(&self, other: &Self) -> bool {
        let mut a: Vec<&String> = self.words.iter().collect();
        let mut b: Vec<&String> = other.words.iter().collect();
        a.sort();
        b.sort();
        a == b && self.named_pairs() == other.named_pairs()
    }
}

fn for_each_row<R, F>(r: R, fields: usize, mut f: F) -> Result<()>
where
    R: BufRead,
    F: FnMut(usize, &[&str]) -> Result<()>,
{
    for (i, line) in r.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::parse(lineno, e.to_string()))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('\t').collect();
        if parts.len() != fields {
            return Err(Error::parse(
                lineno,
                format!("expected {fields} tab-separated fields, found {}", parts.len()),
            ));
        }
        f(lineno, &parts)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_of_directed_proportions() {
        let c = AssociationCorpus::parse_stimulus_counts("CAT\tDOG\t25\t100\nDOG\tCAT\t40\t100\n".as_bytes())
            .unwrap();
        assert_eq!(c.word_count(), 2);
        assert_eq!(c.strength("cat", "dog"), Some(0.4));
        let g = c.to_dissimilarity();
        assert_eq!(g.get(0, 1), Some(0.6));
    }

    #[test]
    fn direction_order_does_not_matter() {
        let a = AssociationCorpus::parse_stimulus_counts("A\tB\t3\t10\nB\tA\t7\t20\n".as_bytes()).unwrap();
        let b = AssociationCorpus::parse_stimulus_counts("B\tA\t7\t20\nA\tB\t3\t10\n".as_bytes()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.strength("A", "B"), Some(0.35));
    }

    #[test]
    fn single_direction() {
        let c = AssociationCorpus::parse_stimulus_counts("A\tB\t10\t100\n".as_bytes()).unwrap();
        assert_eq!(c.strength("B", "A"), Some(0.1));
    }

    #[test]
    fn stimulus_errors() {
        let err = AssociationCorpus::parse_stimulus_counts("# c\nA\tB\t120\t100\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(AssociationCorpus::parse_stimulus_counts("A\tB\t1\n".as_bytes()).is_err());
        assert!(AssociationCorpus::parse_stimulus_counts("A\tB\t0\t10\n".as_bytes()).is_err());
        let dup = AssociationCorpus::parse_stimulus_counts("A\tB\t1\t10\na \tB\t2\t10\n".as_bytes());
        assert!(matches!(dup, Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn edge_list_rules() {
        let c = AssociationCorpus::parse_edge_list("cat\tdog\t0.4\n".as_bytes()).unwrap();
        assert_eq!((c.word_count(), c.pair_count()), (2, 1));
        assert_eq!(c.words(), &["CAT", "DOG"]);

        let c = AssociationCorpus::parse_edge_list("A\tB\t0.2\nB\tA\t0.3\n".as_bytes()).unwrap();
        assert_eq!(c.pair_count(), 1);
        assert_eq!(c.strength("A", "B"), Some(0.3));

        let err = AssociationCorpus::parse_edge_list("CAT\tCAT\t0.5\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        for bad in ["A\tB\t1.5\n", "A\tB\t-0.1\n", "A\tB\tx\n", "A\t\t0.5\n"] {
            assert!(
                AssociationCorpus::parse_edge_list(bad.as_bytes()).is_err(),
                "{bad:?}"
            );
        }

        let c = AssociationCorpus::parse_edge_list("A\tB\t0\n".as_bytes()).unwrap();
        assert_eq!((c.word_count(), c.pair_count()), (0, 0));
    }

    #[test]
    fn dissimilarity_preserves_structure() {
        let c = AssociationCorpus::parse_edge_list("A\tB\t1\nB\tC\t0.25\n".as_bytes()).unwrap();
        let g = c.to_dissimilarity();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.get(0, 1), Some(0.0));
        assert_eq!(g.get(1, 2), Some(0.75));
        assert_eq!(AssociationCorpus::new().to_dissimilarity().vertex_count(), 0);
    }
}
