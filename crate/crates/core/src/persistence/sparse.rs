//! Sparse column vectors over Z/p, sorted by row index.

use crate::algebra::Field;

pub(crate) type Column = Vec<(usize, u32)>;

/// Pivot of a column: its largest row index and the coefficient there.
pub(crate) fn low(col: &Column) -> Option<(usize, u32)> {
    col.last().copied()
}

/// `a + factor·b`, dropping zeros.
pub(crate) fn axpy(a: &Column, factor: u32, b: &Column, field: &Field) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let c = field.mul(factor, b[j].1);
            if c != 0 {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = field.add(a[i].1, field.mul(factor, b[j].1));
            if c != 0 {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Factor that cancels `target` against `pivot`: `target + f·pivot = 0`.
pub(crate) fn cancel_factor(target: u32, pivot: u32, field: &Field) -> u32 {
    let inv = field.inv(pivot).expect("pivot coefficient is nonzero");
    field.neg(field.mul(target, inv))
}

pub(crate) fn scale(col: &Column, a: u32, field: &Field) -> Column {
    if a.is_multiple_of(field.modulus()) {
        return Vec::new();
    }
    col.iter().map(|&(r, c)| (r, field.mul(a, c))).collect()
}

/// Echelon basis keyed by pivot row, where every stored column's pivot is
/// its largest row. Reduction against it is canonical: the remainder has no
/// entries on pivot rows, so two vectors differ by an element of the span
/// exactly when their remainders coincide.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    by_low: std::collections::HashMap<usize, Column>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.by_low.len()
    }

    /// Reduces `col` until no entry sits on a pivot row.
    pub(crate) fn reduce(&self, col: &Column, field: &Field) -> Column {
        let mut col = col.clone();
        // Entries above the current cursor are already clear of pivots.
        let mut cursor = col.len();
        while cursor > 0 {
            let (row, c) = col[cursor - 1];
            if let Some(pivot) = self.by_low.get(&row) {
                let f = cancel_factor(c, low(pivot).unwrap().1, field);
                let kept_above = col.len() - cursor;
                col = axpy(&col, f, pivot, field);
                // the pivot row was eliminated and nothing above it changed
                cursor = col.len() - kept_above;
            } else {
                cursor -= 1;
            }
        }
        col
    }

    /// Reduces `col` and inserts the remainder if nonzero. Returns whether
    /// the rank grew.
    pub(crate) fn insert(&mut self, col: &Column, field: &Field) -> bool {
        let r = self.reduce_low(col, field);
        match low(&r) {
            Some((row, _)) => {
                self.by_low.insert(row, r);
                true
            }
            None => false,
        }
    }

    /// Reduces only until the pivot row is free (standard column reduction).
    fn reduce_low(&self, col: &Column, field: &Field) -> Column {
        let mut col = col.clone();
        while let Some((row, c)) = low(&col) {
            match self.by_low.get(&row) {
                Some(pivot) => {
                    let f = cancel_factor(c, low(pivot).unwrap().1, field);
                    col = axpy(&col, f, pivot, field);
                }
                None => break,
            }
        }
        col
    }
}
