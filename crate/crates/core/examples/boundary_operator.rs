//! Oriented simplices, chains over Z/p, and the boundary operator.

use wordtopo::algebra::{boundary_simplex, Chain, Field, Simplex};

fn main() -> wordtopo::Result<()> {
    let z2 = Field::z2();
    let z3 = Field::new(3)?;

    // [2,0,1] is an even permutation of [0,1,2]; [1,0,2] is odd.
    for vs in [[2u32, 0, 1], [1, 0, 2]] {
        let (s, sign) = Simplex::canonicalize(&vs)?;
        println!("{vs:?} -> {s} with sign {sign:+}");
    }

    let tri = Simplex::from_sorted(vec![0, 1, 2])?;
    println!(
        "boundary of {tri} over Z/3: {:?}",
        terms(&boundary_simplex(&tri, &z3))
    );
    println!(
        "boundary of {tri} over Z/2: {:?}",
        terms(&boundary_simplex(&tri, &z2))
    );

    // A hollow square is a cycle; a path is not.
    let square = Chain::from_oriented(
        1,
        [(1, &[0u32, 1][..]), (1, &[1, 2]), (1, &[2, 3]), (1, &[3, 0])],
        &z3,
    )?;
    let path = Chain::from_oriented(1, [(1, &[0u32, 1][..]), (1, &[1, 2])], &z3)?;
    println!("d(square) = {:?}", terms(&square.boundary(&z3)));
    println!("d(path)   = {:?}", terms(&path.boundary(&z3)));

    // The boundary of a boundary vanishes in every field.
    let tet = Simplex::from_sorted(vec![0, 1, 2, 3])?;
    for f in [z2, z3, Field::new(7)?] {
        let dd = boundary_simplex(&tet, &f).boundary(&f);
        println!("Z/{}: dd[0,1,2,3] is zero: {}", f.modulus(), dd.is_zero());
    }
    Ok(())
}

fn terms(c: &Chain) -> Vec<String> {
    c.terms().map(|(s, k)| format!("{k}{s}")).collect()
}
