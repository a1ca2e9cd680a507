//! Reading stimulus-response counts into an association corpus and looking
//! at the resulting graphs.

use wordtopo::ingest::AssociationCorpus;

const COUNTS: &str = "\
# stimulus\tresponse\tcount\ttotal
cat\tdog\t40\t100
dog\tcat\t55\t100
dog\tbone\t20\t100
bone\tdog\t30\t100
cat\tmilk\t5\t100
milk\tcow\t35\t90
";

fn main() -> wordtopo::Result<()> {
    let corpus = AssociationCorpus::parse_stimulus_counts(COUNTS.as_bytes())?;
    println!("{} words: {:?}", corpus.word_count(), corpus.words());
    for (a, b, s) in corpus.pairs() {
        println!(
            "  {:<5} {:<5} strength {s:.3}",
            corpus.word(a).unwrap_or("?"),
            corpus.word(b).unwrap_or("?")
        );
    }

    let d = corpus.to_dissimilarity();
    println!("dissimilarity scales: {:?}", d.event_points());

    // Malformed rows are reported with their line number.
    for bad in [
        "cat\tdog\t120\t100\n",
        "cat\tdog\t1\t10\ncat\tdog\t2\t10\n",
        "cat\tdog\tmany\t10\n",
    ] {
        match AssociationCorpus::parse_stimulus_counts(bad.as_bytes()) {
            Ok(_) => println!("unexpectedly accepted {bad:?}"),
            Err(e) => println!("rejected: {e}"),
        }
    }

    let mut edges = Vec::new();
    corpus.write_edge_list(&mut edges)?;
    let again = AssociationCorpus::parse_edge_list(&edges[..])?;
    println!("edge-list round trip preserves the corpus: {}", again == corpus);
    Ok(())
}
