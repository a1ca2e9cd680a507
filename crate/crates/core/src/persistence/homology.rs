//! Homology of a single, fixed complex: Betti numbers, cycle bases, and
//! arithmetic on homology classes through canonical coset representatives.

use std::collections::{BTreeSet, HashMap};

use super::sparse::{axpy, cancel_factor, low, scale, Column, Echelon};
use crate::algebra::{Chain, Field, Simplex};
use crate::complex::{validate_complex, Filtration};
use crate::error::{Error, Result};

fn group_by_dim<'a, I>(simplices: I) -> Vec<Vec<&'a Simplex>>
where
    I: IntoIterator<Item = &'a Simplex>,
{
    let mut by_dim: Vec<Vec<&Simplex>> = Vec::new();
    for s in simplices {
        if by_dim.len() <= s.dim() {
            by_dim.resize_with(s.dim() + 1, Vec::new);
        }
        by_dim[s.dim()].push(s);
    }
    for v in &mut by_dim {
        v.sort();
        v.dedup();
    }
    by_dim
}

fn index_of<'a>(simplices: &[&'a Simplex]) -> HashMap<&'a Simplex, usize> {
    simplices.iter().enumerate().map(|(i, &s)| (s, i)).collect()
}

/// Boundary columns of `cells`, indexed against `faces`.
fn boundary_columns(cells: &[&Simplex], faces: &HashMap<&Simplex, usize>, field: &Field) -> Vec<Column> {
    cells
        .iter()
        .map(|s| {
            let mut col: Column = s
                .faces()
                .map(|(face, sign)| (faces[&face], field.sign(sign)))
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

fn rank(cols: &[Column], field: &Field) -> usize {
    let mut e = Echelon::default();
    cols.iter().filter(|c| e.insert(c, field)).count()
}

/// Rank of the boundary map out of dimension `k` (zero for `k = 0`).
fn boundary_rank(by_dim: &[Vec<&Simplex>], k: usize, field: &Field) -> usize {
    if k == 0 || k >= by_dim.len() {
        return 0;
    }
    let faces = index_of(&by_dim[k - 1]);
    rank(&boundary_columns(&by_dim[k], &faces, field), field)
}

/// Betti numbers `β_0..=β_max_k` of a face-closed set of simplices.
pub fn betti_numbers<'a, I>(simplices: I, max_k: usize, field: Field) -> Result<Vec<usize>>
where
    I: IntoIterator<Item = &'a Simplex>,
{
    let all: Vec<&Simplex> = simplices.into_iter().collect();
    let violations = validate_complex(all.iter().copied());
    if let Some(first) = violations.first() {
        return Err(Error::NotClosed(violations.len(), first.to_string()));
    }
    let by_dim = group_by_dim(all);
    Ok(betti_from_groups(&by_dim, max_k, &field))
}

fn betti_from_groups(by_dim: &[Vec<&Simplex>], max_k: usize, field: &Field) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=max_k + 1).map(|k| boundary_rank(by_dim, k, field)).collect();
    (0..=max_k)
        .map(|k| {
            let n = by_dim.get(k).map_or(0, Vec::len);
            n - ranks[k] - ranks[k + 1]
        })
        .collect()
}

/// `β_k` of the complex `V_eps` of a filtration, computed as
/// `nullity(∂_k) - rank(∂_{k+1})`.
///
/// The value is only meaningful for `k < filt.max_dim()`, since killing
/// `k`-cycles needs `(k+1)`-simplices.
pub fn betti_at(filt: &Filtration, eps: f64, k: usize, field: Field) -> usize {
    let by_dim = group_by_dim(filt.prefix_at(eps).iter().map(|e| &e.simplex));
    let n = by_dim.get(k).map_or(0, Vec::len);
    n - boundary_rank(&by_dim, k, &field) - boundary_rank(&by_dim, k + 1, &field)
}

/// The `k`-th homology of a fixed complex, set up for computing with classes.
///
/// Holds an echelon basis of the boundaries `B_k` so that any cycle can be
/// reduced to a canonical representative of its coset `z + B_k`.
#[derive(Clone, Debug)]
pub struct HomologyContext {
    field: Field,
    k: usize,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    boundaries: Echelon,
    cycles: Vec<Column>,
}

impl HomologyContext {
    pub fn new<'a, I>(simplices: I, k: usize, field: Field) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        let all: Vec<&Simplex> = simplices.into_iter().collect();
        let violations = validate_complex(all.iter().copied());
        if let Some(first) = violations.first() {
            return Err(Error::NotClosed(violations.len(), first.to_string()));
        }
        let by_dim = group_by_dim(all);
        let empty = Vec::new();
        let cells = by_dim.get(k).unwrap_or(&empty);
        let index = index_of(cells);

        // kernel of ∂_k from the zero columns of a tracked reduction
        let cycles: Vec<Column> = if k == 0 {
            (0..cells.len()).map(|i| vec![(i, 1)]).collect()
        } else {
            let faces = index_of(&by_dim[k - 1]);
            let cols = boundary_columns(cells, &faces, &field);
            kernel_basis(&cols, &field)
        };

        let mut boundaries = Echelon::default();
        if let Some(cofaces) = by_dim.get(k + 1) {
            for col in boundary_columns(cofaces, &index, &field) {
                boundaries.insert(&col, &field);
            }
        }

        Ok(Self {
            field,
            k,
            simplices: cells.iter().map(|&s| s.clone()).collect(),
            index: cells.iter().enumerate().map(|(i, &s)| (s.clone(), i)).collect(),
            boundaries,
            cycles,
        })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn betti(&self) -> usize {
        self.cycles.len() - self.boundaries.rank()
    }

    fn to_column(&self, z: &Chain) -> Result<Column> {
        if z.dim() != self.k {
            return Err(Error::DimensionMismatch {
                left: z.dim(),
                right: self.k,
            });
        }
        let mut col = Vec::with_capacity(z.len());
        for (s, c) in z.terms() {
            let i = self
                .index
                .get(s)
                .ok_or_else(|| Error::InvalidParameter(format!("simplex {s} is not in the complex")))?;
            col.push((*i, c));
        }
        col.sort_unstable_by_key(|&(r, _)| r);
        Ok(col)
    }

    fn to_chain(&self, col: &Column) -> Chain {
        Chain::from_terms(
            self.k,
            col.iter().map(|&(i, c)| (self.simplices[i].clone(), c)),
            &self.field,
        )
        .expect("columns index k-simplices")
    }

    fn checked_cycle(&self, z: &Chain) -> Result<Column> {
        let col = self.to_column(z)?;
        if !z.boundary(&self.field).is_zero() {
            return Err(Error::NotACycle);
        }
        Ok(col)
    }

    /// Canonical representative of `z + B_k`. Two cycles get the same
    /// representative exactly when their difference is a boundary.
    pub fn representative(&self, z: &Chain) -> Result<Chain> {
        let col = self.checked_cycle(z)?;
        Ok(self.to_chain(&self.boundaries.reduce(&col, &self.field)))
    }

    pub fn is_boundary(&self, z: &Chain) -> Result<bool> {
        Ok(self.representative(z)?.is_zero())
    }

    pub fn equivalent(&self, z: &Chain, y: &Chain) -> Result<bool> {
        Ok(self.representative(z)? == self.representative(y)?)
    }

    /// `(z + B_k) ⊕ (y + B_k)`, as a canonical representative.
    pub fn add(&self, z: &Chain, y: &Chain) -> Result<Chain> {
        let zc = self.checked_cycle(z)?;
        let yc = self.checked_cycle(y)?;
        let sum = axpy(&zc, 1, &yc, &self.field);
        Ok(self.to_chain(&self.boundaries.reduce(&sum, &self.field)))
    }

    /// `a·(z + B_k)`, as a canonical representative.
    pub fn scale(&self, a: u32, z: &Chain) -> Result<Chain> {
        let zc = self.checked_cycle(z)?;
        let scaled = scale(&zc, a, &self.field);
        Ok(self.to_chain(&self.boundaries.reduce(&scaled, &self.field)))
    }

    /// Cycles whose classes form a basis of `H_k`.
    ///
    /// Each generator is returned as its canonical coset representative,
    /// scaled so that the coefficient on its last simplex is one.
    pub fn basis(&self) -> Vec<Chain> {
        let f = &self.field;
        let mut independent = Echelon::default();
        let mut out = Vec::new();
        for z in &self.cycles {
            let r = self.boundaries.reduce(z, f);
            if r.is_empty() || !independent.insert(&r, f) {
                continue;
            }
            let lead = low(&r).unwrap().1;
            out.push(self.to_chain(&scale(&r, f.inv(lead).unwrap(), f)));
        }
        debug_assert_eq!(out.len(), self.betti());
        out
    }
}

/// Basis of the null space of the matrix with the given columns.
fn kernel_basis(cols: &[Column], field: &Field) -> Vec<Column> {
    let mut reduced: Vec<Column> = Vec::with_capacity(cols.len());
    let mut ops: Vec<Column> = Vec::with_capacity(cols.len());
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    let mut kernel = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        let mut col = col.clone();
        let mut op: Column = vec![(j, 1)];
        while let Some((row, c)) = low(&col) {
            let Some(&i) = pivot_of.get(&row) else { break };
            let f = cancel_factor(c, low(&reduced[i]).unwrap().1, field);
            col = axpy(&col, f, &reduced[i], field);
            op = axpy(&op, f, &ops[i], field);
        }
        match low(&col) {
            Some((row, _)) => {
                pivot_of.insert(row, j);
            }
            None => kernel.push(op.clone()),
        }
        reduced.push(col);
        ops.push(op);
    }
    kernel
}

/// Cycle representatives of a basis of `H_k` for a face-closed complex.
pub fn homology_basis<'a, I>(simplices: I, k: usize, field: Field) -> Result<Vec<Chain>>
where
    I: IntoIterator<Item = &'a Simplex>,
{
    Ok(HomologyContext::new(simplices, k, field)?.basis())
}

/// Convenience: the simplices of a set of vertex lists, closed under faces.
pub fn closure<I, V>(maximal: I) -> Result<BTreeSet<Simplex>>
where
    I: IntoIterator<Item = V>,
    V: AsRef<[u32]>,
{
    let mut out = BTreeSet::new();
    for vs in maximal {
        let (s, _) = Simplex::canonicalize(vs.as_ref())?;
        let v = s.vertices().to_vec();
        // every nonempty subset
        for mask in 1u64..(1u64 << v.len()) {
            let sub: Vec<u32> = (0..v.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| v[i])
                .collect();
            out.insert(Simplex::from_sorted(sub)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn filled_triangle_has_no_loop() {
        let c = closure([[0u32, 1, 2]]).unwrap();
        assert_eq!(c.len(), 7);
        assert!(homology_basis(&c, 1, Field::z2()).unwrap().is_empty());
        assert_eq!(betti_numbers(&c, 2, Field::z2()).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn hollow_triangle_loop() {
        let c = closure([[0u32, 1], [1, 2], [0, 2]]).unwrap();
        for p in [2, 3, 7] {
            let f = Field::new(p).unwrap();
            let basis = homology_basis(&c, 1, f).unwrap();
            assert_eq!(basis.len(), 1);
            assert!(basis[0].boundary(&f).is_zero());
            assert_eq!(basis[0].len(), 3);
        }
    }

    #[test]
    fn disjoint_vertices() {
        let c = closure([[0u32], [1]]).unwrap();
        let basis = homology_basis(&c, 0, Field::z2()).unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn non_closed_input_rejected() {
        let c = vec![s(&[0, 1])];
        assert!(matches!(
            homology_basis(&c, 1, Field::z2()),
            Err(Error::NotClosed(2, _))
        ));
    }

    #[test]
    fn coset_arithmetic() {
        let f = Field::new(3).unwrap();
        let c = closure([&[0u32, 1, 2][..], &[2, 3], &[3, 0]]).unwrap();
        let ctx = HomologyContext::new(&c, 1, f).unwrap();
        assert_eq!(ctx.betti(), 1);
        let small =
            Chain::from_oriented(1, [(1, &[0u32, 2][..]), (1, &[2, 3][..]), (1, &[3, 0][..])], &f).unwrap();
        let big = Chain::from_oriented(
            1,
            [
                (1, &[0u32, 1][..]),
                (1, &[1, 2][..]),
                (1, &[2, 3][..]),
                (1, &[3, 0][..]),
            ],
            &f,
        )
        .unwrap();
        assert!(ctx.equivalent(&small, &big).unwrap());
        let doubled = ctx.add(&small, &big).unwrap();
        assert_eq!(doubled, ctx.scale(2, &small).unwrap());
        assert!(ctx.add(&small, &small.negate(&f)).unwrap().is_zero());

        let not_cycle = Chain::from_simplex(s(&[0, 1]));
        assert!(matches!(ctx.representative(&not_cycle), Err(Error::NotACycle)));
    }

    #[test]
    fn betti_at_tracks_scale() {
        use crate::complex::{build_vr_filtration, DissimilarityGraph, VrOptions};
        let g = DissimilarityGraph::from_edges(
            4,
            [
                (0, 1, 0.2),
                (1, 2, 0.2),
                (2, 3, 0.2),
                (0, 3, 0.2),
                (0, 2, 0.6),
                (1, 3, 0.7),
            ],
        )
        .unwrap();
        let filt = build_vr_filtration(&g, &VrOptions::default());
        let f = Field::z2();
        assert_eq!(betti_at(&filt, 0.1, 0, f), 4);
        assert_eq!(betti_at(&filt, 0.2, 0, f), 1);
        assert_eq!(betti_at(&filt, 0.2, 1, f), 1);
        assert_eq!(betti_at(&filt, 0.6, 1, f), 0);
        assert_eq!(betti_at(&filt, 0.7, 2, f), 0);
    }
}
