use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::simplex::{Simplex, Vertex};
use crate::error::{Error, Result};

/// A formal sum of `dim`-simplices with coefficients in a prime field.
///
/// Terms with coefficient zero are never stored, so two chains are equal
/// exactly when their term maps are equal. The chain does not remember its
/// field; every operation takes the field explicitly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: usize,
    terms: BTreeMap<Simplex, u32>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The chain `1·s`.
    pub fn from_simplex(s: Simplex) -> Self {
        let dim = s.dim();
        let mut terms = BTreeMap::new();
        terms.insert(s, 1);
        Self { dim, terms }
    }

    /// Builds a chain from oriented terms. Each vertex list may be in any
    /// order; its orientation sign is folded into the coefficient.
    pub fn from_oriented<'a, I>(dim: usize, terms: I, field: &Field) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, &'a [Vertex])>,
    {
        let mut chain = Self::zero(dim);
        for (coeff, vertices) in terms {
            let (s, sign) = Simplex::canonicalize(vertices)?;
            chain.check_dim(&s)?;
            chain.accumulate(s, field.element(coeff * sign as i64), field);
        }
        Ok(chain)
    }

    /// Builds a chain from canonical simplices and field coefficients.
    pub fn from_terms<I>(dim: usize, terms: I, field: &Field) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, u32)>,
    {
        let mut chain = Self::zero(dim);
        for (s, c) in terms {
            chain.check_dim(&s)?;
            chain.accumulate(s, c % field.modulus(), field);
        }
        Ok(chain)
    }

    fn check_dim(&self, s: &Simplex) -> Result<()> {
        if s.dim() != self.dim {
            return Err(Error::WrongSimplexDimension {
                simplex: s.to_string(),
                found: s.dim(),
                expected: self.dim,
            });
        }
        Ok(())
    }

    /// Adds `coeff·s` in place. `s` must have this chain's dimension.
    pub(crate) fn accumulate(&mut self, s: Simplex, coeff: u32, field: &Field) {
        debug_assert_eq!(s.dim(), self.dim);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let c = field.add(*e.get(), coeff);
                if c == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = c;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Simplex) -> u32 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    /// Terms in lexicographic simplex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, u32)> + '_ {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.terms.keys()
    }

    pub fn add(&self, other: &Chain, field: &Field) -> Result<Chain> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.accumulate(s.clone(), c, field);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Chain, field: &Field) -> Result<Chain> {
        self.add(&other.negate(field), field)
    }

    pub fn negate(&self, field: &Field) -> Chain {
        self.scale(field.neg(1), field)
    }

    pub fn scale(&self, a: u32, field: &Field) -> Chain {
        let a = a % field.modulus();
        let mut out = Chain::zero(self.dim);
        if a == 0 {
            return out;
        }
        for (s, c) in self.terms() {
            out.terms.insert(s.clone(), field.mul(a, c));
        }
        out
    }

    /// Linear extension of the simplex boundary. The boundary of a 0-chain
    /// is the zero 0-chain.
    pub fn boundary(&self, field: &Field) -> Chain {
        let mut out = Chain::zero(self.dim.saturating_sub(1));
        if self.dim == 0 {
            return out;
        }
        for (s, c) in self.terms() {
            for (face, sign) in s.faces() {
                out.accumulate(face, field.mul(c, field.sign(sign)), field);
            }
        }
        out
    }
}

/// `Σ_j (-1)^j [x_0, …, x̂_j, …, x_k]` reduced into `field`.
pub fn boundary_simplex(s: &Simplex, field: &Field) -> Chain {
    let mut out = Chain::zero(s.dim().saturating_sub(1));
    for (face, sign) in s.faces() {
        out.accumulate(face, field.sign(sign), field);
    }
    out
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{c}{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain<{}>({self})", self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn boundary_of_edge_and_triangle() {
        let f = Field::new(5).unwrap();
        let (a, b, c) = (0, 1, 2);
        let e = boundary_simplex(&s(&[a, b]), &f);
        let want = Chain::from_oriented(0, [(1, &[b][..]), (-1, &[a][..])], &f).unwrap();
        assert_eq!(e, want);

        let t = boundary_simplex(&s(&[a, b, c]), &f);
        let want =
            Chain::from_oriented(1, [(1, &[b, c][..]), (-1, &[a, c][..]), (1, &[a, b][..])], &f).unwrap();
        assert_eq!(t, want);

        assert!(boundary_simplex(&s(&[a]), &f).is_zero());
    }

    #[test]
    fn boundary_term_count() {
        let f = Field::new(3).unwrap();
        for k in 1..6u32 {
            let simplex = s(&(0..=k).collect::<Vec<_>>());
            assert_eq!(boundary_simplex(&simplex, &f).len(), k as usize + 1);
        }
    }

    #[test]
    fn tetrahedron_boundary_of_boundary() {
        for p in [2, 3, 5] {
            let f = Field::new(p).unwrap();
            let d = boundary_simplex(&s(&[0, 1, 2, 3]), &f);
            assert_eq!(d.len(), 4);
            assert!(d.boundary(&f).is_zero());
        }
        let f = Field::z2();
        assert!(Chain::zero(2).boundary(&f).is_zero());
    }

    #[test]
    fn mod_two_addition_cancels() {
        let f = Field::z2();
        let ab = Chain::from_simplex(s(&[0, 1]));
        let ab_bc = Chain::from_terms(1, [(s(&[0, 1]), 1), (s(&[1, 2]), 1)], &f).unwrap();
        let sum = ab.add(&ab_bc, &f).unwrap();
        assert_eq!(sum, Chain::from_simplex(s(&[1, 2])));

        let path = Chain::from_terms(1, [(s(&[0, 1]), 1), (s(&[1, 2]), 1)], &f).unwrap();
        let want = Chain::from_terms(0, [(s(&[0]), 1), (s(&[2]), 1)], &f).unwrap();
        assert_eq!(path.boundary(&f), want);
    }

    #[test]
    fn identity_inverse_and_scaling() {
        let f = Field::new(3).unwrap();
        let c = Chain::from_terms(0, [(s(&[0]), 1), (s(&[1]), 1)], &f).unwrap();
        assert_eq!(c.add(&Chain::zero(0), &f).unwrap(), c);
        assert!(c.add(&c.negate(&f), &f).unwrap().is_zero());
        assert_eq!(c.scale(1, &f), c);
        assert!(c.scale(0, &f).is_zero());
        let doubled = c.scale(2, &f);
        assert_eq!(doubled.coefficient(&s(&[0])), 2);
        assert_eq!(doubled.coefficient(&s(&[1])), 2);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = Field::z2();
        let a = Chain::from_simplex(s(&[0]));
        let b = Chain::from_simplex(s(&[0, 1]));
        assert!(matches!(
            a.add(&b, &f),
            Err(Error::DimensionMismatch { left: 0, right: 1 })
        ));
        assert!(Chain::from_terms(0, [(s(&[0, 1]), 1)], &f).is_err());
    }

    #[test]
    fn oriented_terms_fold_sign() {
        let f = Field::new(5).unwrap();
        let c = Chain::from_oriented(1, [(1, &[1u32, 0][..])], &f).unwrap();
        assert_eq!(c.coefficient(&s(&[0, 1])), 4);
    }
}
