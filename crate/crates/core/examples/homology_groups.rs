//! Betti numbers, homology classes and canonical bases of fixed complexes.

use wordtopo::algebra::{Chain, Field};
use wordtopo::persistence::{betti_numbers, closure, homology_basis, HomologyContext};

fn main() -> wordtopo::Result<()> {
    let z2 = Field::z2();

    let octahedron = closure([
        [0u32, 2, 4],
        [0, 2, 5],
        [0, 3, 4],
        [0, 3, 5],
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 4],
        [1, 3, 5],
    ])?;
    println!("octahedron: {:?}", betti_numbers(&octahedron, 2, z2)?);

    let torus =
        closure((0..7u32).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]))?;
    println!("7-vertex torus: {:?}", betti_numbers(&torus, 2, z2)?);

    // Filled tetrahedron on 0..3 with a hollow triangle 0-2-4 attached.
    let k = closure([&[0u32, 1, 2, 3][..], &[0, 4], &[2, 4]])?;
    println!("worked example: {:?}", betti_numbers(&k, 2, z2)?);

    let h1 = HomologyContext::new(&k, 1, z2)?;
    let loop_a = Chain::from_oriented(1, [(1, &[0u32, 2][..]), (1, &[2, 4]), (1, &[4, 0])], &z2)?;
    let loop_b = Chain::from_oriented(
        1,
        [(1, &[0u32, 1][..]), (1, &[1, 2]), (1, &[2, 4]), (1, &[4, 0])],
        &z2,
    )?;
    let filled = Chain::from_oriented(1, [(1, &[0u32, 1][..]), (1, &[1, 2]), (1, &[2, 0])], &z2)?;
    println!(
        "loop 0-2-4 and detour 0-1-2-4 are homologous: {}",
        h1.equivalent(&loop_a, &loop_b)?
    );
    println!(
        "boundary of a filled face is trivial: {}",
        h1.is_boundary(&filled)?
    );
    for g in homology_basis(&k, 1, z2)? {
        let t: Vec<String> = g.terms().map(|(s, c)| format!("{c}{s}")).collect();
        println!("basis generator: {}", t.join(" + "));
    }
    Ok(())
}
