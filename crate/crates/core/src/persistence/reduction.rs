use std::collections::HashMap;

use super::barcode::{Barcode, Interval};
use super::sparse::{axpy, cancel_factor, low, Column};
use crate::algebra::{Chain, Field, Simplex};
use crate::complex::Filtration;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Keep the column-operation record so essential classes get
    /// representative cycles. Costs one extra sparse column per simplex.
    pub track_cycles: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self { track_cycles: true }
    }
}

/// The boundary matrix of a filtration after left-to-right column reduction.
#[derive(Clone, Debug)]
pub struct ReducedFiltration<'a> {
    filtration: &'a Filtration,
    field: Field,
    columns: Vec<Column>,
    /// Column-operation record: `reduced[j] = boundary · ops[j]`.
    ops: Option<Vec<Column>>,
    pairs: Vec<(usize, usize)>,
    essentials: Vec<usize>,
}

/// Reduces the boundary matrix of `filt` over `field`, tracking cycles.
pub fn reduce(filt: &Filtration, field: Field) -> ReducedFiltration<'_> {
    reduce_with(filt, field, ReduceOptions::default())
}

pub fn reduce_with(filt: &Filtration, field: Field, opts: ReduceOptions) -> ReducedFiltration<'_> {
    let entries = filt.entries();
    let n = entries.len();
    let index: HashMap<&Simplex, usize> = entries.iter().enumerate().map(|(i, e)| (&e.simplex, i)).collect();

    let mut columns: Vec<Column> = Vec::with_capacity(n);
    let mut ops: Option<Vec<Column>> = opts.track_cycles.then(|| Vec::with_capacity(n));
    let mut pivot_col: Vec<usize> = vec![usize::MAX; n];
    let mut pairs = Vec::new();

    for (j, e) in entries.iter().enumerate() {
        let mut col: Column = e
            .simplex
            .faces()
            .map(|(face, sign)| (index[&face], field.sign(sign)))
            .collect();
        col.sort_unstable_by_key(|&(r, _)| r);
        let mut op: Column = vec![(j, 1)];

        while let Some((row, c)) = low(&col) {
            let i = pivot_col[row];
            if i == usize::MAX {
                break;
            }
            let f = cancel_factor(c, low(&columns[i]).unwrap().1, &field);
            col = axpy(&col, f, &columns[i], &field);
            if let Some(ops) = &ops {
                op = axpy(&op, f, &ops[i], &field);
            }
        }

        if let Some((row, _)) = low(&col) {
            pivot_col[row] = j;
            pairs.push((row, j));
        }
        columns.push(col);
        if let Some(ops) = &mut ops {
            ops.push(op);
        }
    }

    let essentials = (0..n)
        .filter(|&j| columns[j].is_empty() && pivot_col[j] == usize::MAX)
        .collect();
    pairs.sort_unstable();

    ReducedFiltration {
        filtration: filt,
        field,
        columns,
        ops,
        pairs,
        essentials,
    }
}

impl<'a> ReducedFiltration<'a> {
    pub fn filtration(&self) -> &'a Filtration {
        self.filtration
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `(birth index, death index)` pairs, sorted by birth index.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Indices of simplices creating classes that never die.
    pub fn essentials(&self) -> &[usize] {
        &self.essentials
    }

    /// Intervals of dimension `k`, sorted by (birth, death, birth index).
    pub fn barcode_dim(&self, k: usize) -> Vec<Interval> {
        let entries = self.filtration.entries();
        let mut out: Vec<Interval> = self
            .pairs
            .iter()
            .filter(|&&(b, _)| entries[b].simplex.dim() == k)
            .map(|&(b, d)| Interval {
                dim: k,
                birth: entries[b].birth,
                death: entries[d].birth,
                birth_index: b,
                death_index: Some(d),
            })
            .chain(
                self.essentials
                    .iter()
                    .filter(|&&b| entries[b].simplex.dim() == k)
                    .map(|&b| Interval {
                        dim: k,
                        birth: entries[b].birth,
                        death: f64::INFINITY,
                        birth_index: b,
                        death_index: None,
                    }),
            )
            .collect();
        out.sort_by(Interval::cmp_order);
        out
    }

    /// Intervals for dimensions `0..=max_k`.
    pub fn barcode(&self, max_k: usize) -> Barcode {
        Barcode::new((0..=max_k).flat_map(|k| self.barcode_dim(k)).collect())
    }

    /// A cycle representing the class of `interval`.
    ///
    /// For a dimension-0 class this is the vertex that created it. For a
    /// finite class in higher dimension it is the reduced boundary of the
    /// killing simplex; for an essential class it is the recorded column
    /// combination of the creating simplex.
    pub fn representative_cycle(&self, interval: &Interval) -> Result<Chain> {
        let entries = self.filtration.entries();
        let not_found = || Error::IntervalNotFound(interval.to_string());
        let b = interval.birth_index;
        let e = entries.get(b).ok_or_else(not_found)?;
        if e.simplex.dim() != interval.dim || e.birth != interval.birth {
            return Err(not_found());
        }
        let death = match self.pairs.binary_search_by_key(&b, |&(birth, _)| birth) {
            Ok(pos) => Some(self.pairs[pos].1),
            Err(_) if self.essentials.binary_search(&b).is_ok() => None,
            Err(_) => return Err(not_found()),
        };
        if death != interval.death_index {
            return Err(not_found());
        }

        if interval.dim == 0 {
            return Ok(Chain::from_simplex(e.simplex.clone()));
        }
        let col = match death {
            Some(d) => &self.columns[d],
            None => {
                let ops = self.ops.as_ref().ok_or(Error::CyclesNotTracked)?;
                &ops[b]
            }
        };
        Chain::from_terms(
            interval.dim,
            col.iter().map(|&(i, c)| (entries[i].simplex.clone(), c)),
            &self.field,
        )
    }
}
