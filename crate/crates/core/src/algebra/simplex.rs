use std::fmt;

use crate::error::{Error, Result};

/// Vertex identifier. Ids are dense and start at zero.
pub type Vertex = u32;

/// An abstract simplex stored by its strictly increasing vertex list.
///
/// Orientation is never stored here; an arbitrary vertex ordering is
/// normalized by [`Simplex::canonicalize`], which hands back the parity of
/// the ordering as a separate sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<Vertex>,
}

impl Simplex {
    /// Sorts `vertices` and returns the simplex with the orientation sign of
    /// the given ordering (`+1` for even permutations of the sorted order).
    pub fn canonicalize(vertices: &[Vertex]) -> Result<(Self, i8)> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut inversions = 0usize;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] > vertices[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Ok((Self { vertices: sorted }, sign))
    }

    /// Builds a simplex from vertices that are already strictly increasing.
    pub fn from_sorted(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
            if w[0] > w[1] {
                return Self::canonicalize(&vertices).map(|(s, _)| s);
            }
        }
        Ok(Self { vertices })
    }

    /// Caller guarantees strictly increasing, non-empty input.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertex(v: Vertex) -> Self {
        Self { vertices: vec![v] }
    }

    pub fn edge(a: Vertex, b: Vertex) -> Result<Self> {
        Self::canonicalize(&[a, b]).map(|(s, _)| s)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Codimension-one faces with their boundary signs `(-1)^j`, where `j`
    /// is the position of the omitted vertex. Empty for vertices.
    pub fn faces(&self) -> impl Iterator<Item = (Simplex, i8)> + '_ {
        let n = if self.vertices.len() > 1 {
            self.vertices.len()
        } else {
            0
        };
        (0..n).map(move |j| {
            let mut face = Vec::with_capacity(self.vertices.len() - 1);
            face.extend_from_slice(&self.vertices[..j]);
            face.extend_from_slice(&self.vertices[j + 1..]);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            (Simplex { vertices: face }, sign)
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Parity from the cycle decomposition of the sorting permutation.
    fn parity_by_cycles(vertices: &[Vertex]) -> i8 {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let perm: Vec<usize> = vertices
            .iter()
            .map(|v| sorted.iter().position(|s| s == v).unwrap())
            .collect();
        let mut seen = vec![false; perm.len()];
        let mut transpositions = 0;
        for start in 0..perm.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn canonical_signs() {
        let (s, sign) = Simplex::canonicalize(&[1, 0]).unwrap();
        assert_eq!(s.vertices(), &[0, 1]);
        assert_eq!(sign, -1);

        let (s, sign) = Simplex::canonicalize(&[2, 0, 1]).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 2]);
        assert_eq!(sign, parity_by_cycles(&[2, 0, 1]));
        assert_eq!(sign, 1);

        let (_, sign) = Simplex::canonicalize(&[7]).unwrap();
        assert_eq!(sign, 1);
    }

    #[test]
    fn duplicates_and_empty_rejected() {
        assert!(matches!(
            Simplex::canonicalize(&[0, 0, 1]),
            Err(Error::DuplicateVertex(0))
        ));
        assert!(matches!(Simplex::canonicalize(&[]), Err(Error::EmptySimplex)));
    }

    #[test]
    fn sign_agrees_with_cycle_decomposition() {
        let base = [3u32, 5, 8, 9];
        // all 24 orderings
        let mut orders = vec![vec![]];
        for _ in 0..base.len() {
            let mut next = Vec::new();
            for o in &orders {
                for v in base {
                    if !o.contains(&v) {
                        let mut o2 = o.clone();
                        o2.push(v);
                        next.push(o2);
                    }
                }
            }
            orders = next;
        }
        assert_eq!(orders.len(), 24);
        for o in orders {
            let (_, sign) = Simplex::canonicalize(&o).unwrap();
            assert_eq!(sign, parity_by_cycles(&o), "{o:?}");
        }
    }

    #[test]
    fn faces_of_triangle() {
        let t = Simplex::from_sorted(vec![0, 1, 2]).unwrap();
        let faces: Vec<_> = t.faces().map(|(s, e)| (s.vertices().to_vec(), e)).collect();
        assert_eq!(faces, vec![(vec![1, 2], 1), (vec![0, 2], -1), (vec![0, 1], 1)]);
        assert_eq!(Simplex::vertex(4).faces().count(), 0);
    }

    #[test]
    fn from_sorted_normalizes_unsorted_input() {
        let s = Simplex::from_sorted(vec![2, 1]).unwrap();
        assert_eq!(s.vertices(), &[1, 2]);
    }
}
