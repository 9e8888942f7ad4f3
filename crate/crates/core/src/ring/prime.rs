use rand::Rng;

use super::{DivisionRing, RingDescriptor};
use crate::{Error, Result};

/// `GF(p)` with elements stored as canonical residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn element(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
}

impl DivisionRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        Ok(acc)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PrimeField(self.p)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn enumerate_elements(&self) -> Result<Vec<u64>> {
        Ok((0..self.p).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&3).unwrap(), 5);
        for a in 1..7 {
            assert_eq!(f7.mul(&a, &f7.inv(&a).unwrap()), 1);
        }
        assert_eq!(f7.element(-1), 6);
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_ok());
    }
}
