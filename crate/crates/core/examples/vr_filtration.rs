//! Building a Vietoris-Rips filtration from a small dissimilarity graph and
//! looking at the complex at a few scales.

use wordtopo::complex::{build_vr_filtration, DissimilarityGraph, VertexBirth, VrOptions};

fn main() -> wordtopo::Result<()> {
    // A square whose diagonal 0-2 is much longer than its sides.
    let g = DissimilarityGraph::from_edges(
        4,
        [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.3), (0, 3, 0.4), (0, 2, 0.6)],
    )?;

    let opts = VrOptions {
        max_dim: 2,
        ..Default::default()
    };
    let filt = build_vr_filtration(&g, &opts);
    println!("{} simplices, event points {:?}", filt.len(), filt.event_points());
    for e in filt.entries() {
        println!("  {:>4}  {}", e.birth, e.simplex);
    }

    for eps in [0.0, 0.35, 0.5, 0.6] {
        let k = filt.complex_at(eps);
        let by_dim: Vec<usize> = (0..=2)
            .map(|d| k.iter().filter(|s| s.dim() == d).count())
            .collect();
        println!("eps={eps}: simplices per dimension {by_dim:?}");
    }

    // Vertices may instead appear with their first edge.
    let late = build_vr_filtration(
        &g,
        &VrOptions {
            vertex_birth: VertexBirth::FirstEdge,
            ..opts
        },
    );
    let births: Vec<f64> = late
        .entries()
        .iter()
        .filter(|e| e.simplex.dim() == 0)
        .map(|e| e.birth)
        .collect();
    println!("first-edge vertex births: {births:?}");

    let mut tsv = Vec::new();
    filt.write_tsv(&mut tsv)?;
    print!("{}", String::from_utf8_lossy(&tsv));
    Ok(())
}
