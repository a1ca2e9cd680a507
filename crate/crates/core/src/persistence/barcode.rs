use std::cmp::Ordering;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// A half-open persistence interval `[birth, death)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub dim: usize,
    pub birth: f64,
    /// `f64::INFINITY` for classes that never die.
    pub death: f64,
    /// Filtration index of the creating simplex.
    pub birth_index: usize,
    /// Filtration index of the killing simplex, if any.
    pub death_index: Option<usize>,
}

impl Interval {
    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    /// Born and killed at the same scale. Such intervals contain no point.
    pub fn is_zero_length(&self) -> bool {
        self.death == self.birth
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn contains(&self, eps: f64) -> bool {
        self.birth <= eps && eps < self.death
    }

    pub(crate) fn cmp_order(a: &Interval, b: &Interval) -> Ordering {
        a.dim
            .cmp(&b.dim)
            .then_with(|| a.birth.total_cmp(&b.birth))
            .then_with(|| a.death.total_cmp(&b.death))
            .then_with(|| a.birth_index.cmp(&b.birth_index))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{} [{}, {})", self.dim, self.birth, fmt_death(self.death))
    }
}

fn fmt_death(d: f64) -> String {
    if d.is_infinite() {
        "inf".to_string()
    } else {
        d.to_string()
    }
}

/// Intervals of every dimension, sorted by (dimension, birth, death).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Barcode {
    intervals: Vec<Interval>,
}

impl Barcode {
    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(Interval::cmp_order);
        Self { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn dim(&self, k: usize) -> impl Iterator<Item = &Interval> + '_ {
        self.intervals.iter().filter(move |i| i.dim == k)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.intervals.iter().map(|i| i.dim).max()
    }

    /// Number of dimension-`k` intervals containing `eps`.
    pub fn alive_at(&self, eps: f64, k: usize) -> usize {
        self.dim(k).filter(|i| i.contains(eps)).count()
    }

    /// Drops zero-length intervals.
    pub fn without_zero_length(&self) -> Barcode {
        Barcode {
            intervals: self
                .intervals
                .iter()
                .filter(|i| !i.is_zero_length())
                .cloned()
                .collect(),
        }
    }

    /// Writes `k <TAB> birth <TAB> death` rows, `inf` for infinite deaths.
    pub fn write_tsv<W: Write>(&self, mut w: W, include_zero_length: bool) -> Result<()> {
        for i in &self.intervals {
            if i.is_zero_length() && !include_zero_length {
                continue;
            }
            writeln!(w, "{}\t{}\t{}", i.dim, i.birth, fmt_death(i.death))?;
        }
        Ok(())
    }

    /// Reads rows written by [`Barcode::write_tsv`]. Simplex indices are not
    /// part of the format; intervals read back carry their row number as
    /// `birth_index` and no `death_index`.
    pub fn read_tsv<R: BufRead>(r: R) -> Result<Self> {
        let mut intervals = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::parse(lineno, "expected `k<TAB>birth<TAB>death`"));
            }
            let dim: usize = fields[0]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad dimension `{}`", fields[0])))?;
            let birth: f64 = fields[1]
                .parse()
                .ok()
                .filter(|b: &f64| b.is_finite())
                .ok_or_else(|| Error::parse(lineno, format!("bad birth `{}`", fields[1])))?;
            let death = if fields[2] == "inf" {
                f64::INFINITY
            } else {
                fields[2]
                    .parse()
                    .ok()
                    .filter(|d: &f64| d.is_finite())
                    .ok_or_else(|| Error::parse(lineno, format!("bad death `{}`", fields[2])))?
            };
            if death < birth {
                return Err(Error::parse(lineno, "death precedes birth"));
            }
            intervals.push(Interval {
                dim,
                birth,
                death,
                birth_index: lineno,
                death_index: None,
            });
        }
        Ok(Self::new(intervals))
    }
}
