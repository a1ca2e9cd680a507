//! Persistence barcodes of a filtration, with a representative cycle for
//! each loop.

use wordtopo::algebra::Field;
use wordtopo::complex::{build_vr_filtration, DissimilarityGraph, VrOptions};
use wordtopo::persistence::reduce;

fn main() -> wordtopo::Result<()> {
    // Two squares sharing the edge 1-2; the left one is filled at 0.7.
    let g = DissimilarityGraph::from_edges(
        6,
        [
            (0, 1, 0.1),
            (1, 2, 0.1),
            (2, 3, 0.2),
            (3, 0, 0.2),
            (1, 4, 0.3),
            (4, 5, 0.3),
            (5, 2, 0.4),
            (0, 2, 0.7),
        ],
    )?;
    let filt = build_vr_filtration(&g, &VrOptions::default());

    for p in [2, 3] {
        let field = Field::new(p)?;
        let reduced = reduce(&filt, field);
        let barcode = reduced.barcode(1).without_zero_length();
        println!("over Z/{p}:");
        for iv in barcode.intervals() {
            println!("  {iv}  persistence {:.2}", iv.persistence());
            if iv.dim == 1 {
                let z = reduced.representative_cycle(iv)?;
                let support: Vec<String> = z.terms().map(|(s, c)| format!("{c}{s}")).collect();
                println!("    cycle {}", support.join(" + "));
            }
        }
    }

    let reduced = reduce(&filt, Field::z2());
    let barcode = reduced.barcode(1);
    for eps in [0.25, 0.5, 0.8] {
        println!(
            "alive at {eps}: H0 {}, H1 {}",
            barcode.alive_at(eps, 0),
            barcode.alive_at(eps, 1)
        );
    }
    Ok(())
}
