//! Renders the barcode of a random point cloud on a circle to SVG.
//!
//! `cargo run --example barcode_svg [out.svg]`

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordtopo::algebra::Field;
use wordtopo::complex::{build_vr_filtration, DissimilarityGraph, VrOptions};
use wordtopo::ingest::{render_barcode_svg, RenderOptions};
use wordtopo::persistence::reduce;

fn main() -> wordtopo::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "barcode.svg".into());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 24;
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = 1.0 + rng.gen_range(-0.08..0.08);
            (r * t.cos(), r * t.sin())
        })
        .collect();

    // Distances scaled into [0, 1]; only pairs closer than 0.5 become edges.
    let mut g = DissimilarityGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let d = ((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt() / 2.2;
            if d < 0.5 {
                g.insert(i as u32, j as u32, d)?;
            }
        }
    }
    let filt = build_vr_filtration(
        &g,
        &VrOptions {
            max_dim: 2,
            ..Default::default()
        },
    );
    let barcode = reduce(&filt, Field::z2()).barcode(1);
    for iv in barcode.without_zero_length().dim(1) {
        println!("{iv}");
    }

    let svg = render_barcode_svg(
        &barcode,
        &RenderOptions {
            title: Some("noisy circle".into()),
            max_eps: Some(0.5),
            ..Default::default()
        },
    );
    std::fs::write(&out, svg)?;
    println!("wrote {out}");
    Ok(())
}
