use crate::error::{Error, Result};

/// The prime field Z/p.
///
/// Elements are plain `u32` residues in `0..p`. All arithmetic goes through
/// the field value so that callers never reduce by hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    /// Builds Z/p, rejecting composite or degenerate moduli.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Self { p })
    }

    pub fn z2() -> Self {
        Self { p: 2 }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Reduces an arbitrary signed integer into `0..p`.
    pub fn element(&self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u32) -> u32 {
        let a = a % self.p;
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.element(t0))
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|inv| self.mul(a, inv))
    }

    /// The image of a sign `±1` in the field.
    pub fn sign(&self, sign: i8) -> u32 {
        if sign >= 0 {
            1 % self.p
        } else {
            self.p - 1
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Self::z2()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
