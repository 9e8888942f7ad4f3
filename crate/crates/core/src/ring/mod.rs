//! Exact division rings.
//!
//! A ring is a small value (`Rationals`, `PrimeField { p }`, …) that carries
//! the arithmetic; its elements are plain data. Every ring used in the crate
//! is a division ring: nonzero elements have two-sided inverses.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rand::Rng;

use crate::{Error, Result};

mod opposite;
mod prime;
mod quaternion;
mod rational;

pub use opposite::Opposite;
pub use prime::PrimeField;
pub use quaternion::{Quaternion, Quaternions};
pub use rational::{format_rational, parse_rational, Rationals};

pub trait DivisionRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Product in the ring's own order: `a·b`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Two-sided inverse; `Err(DivisionByZero)` for zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn descriptor(&self) -> RingDescriptor;
    /// Uniform-ish sample with small height, used by randomized checks.
    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Every element exactly once, for finite rings only.
    fn enumerate_elements(&self) -> Result<Vec<Self::Elem>> {
        Err(Error::Unsupported(format!(
            "cannot enumerate the infinite ring {}",
            self.descriptor()
        )))
    }

    fn random_nonzero<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        loop {
            let x = self.random_element(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// Which ring instance a document or handle refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rationals,
    PrimeField(u64),
    Quaternions,
    Opposite(Box<RingDescriptor>),
}

impl RingDescriptor {
    pub fn is_finite(&self) -> bool {
        match self {
            RingDescriptor::PrimeField(_) => true,
            RingDescriptor::Opposite(inner) => inner.is_finite(),
            _ => false,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => f.write_str("Q"),
            RingDescriptor::PrimeField(p) => write!(f, "GF({p})"),
            RingDescriptor::Quaternions => f.write_str("H(Q)"),
            RingDescriptor::Opposite(inner) => write!(f, "op({inner})"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Q" => return Ok(RingDescriptor::Rationals),
            "H(Q)" => return Ok(RingDescriptor::Quaternions),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field characteristic in {s:?}")))?;
            if !prime::is_prime(p) {
                return Err(Error::Parse(format!("GF({p}): {p} is not prime")));
            }
            return Ok(RingDescriptor::PrimeField(p));
        }
        if let Some(inner) = s.strip_prefix("op(").and_then(|r| r.strip_suffix(')')) {
            return Ok(RingDescriptor::Opposite(Box::new(inner.parse()?)));
        }
        Err(Error::Parse(format!("unknown ring descriptor {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring_laws<R: DivisionRing>(ring: &R, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let a = ring.random_element(&mut rng);
            let b = ring.random_element(&mut rng);
            let c = ring.random_element(&mut rng);
            assert_eq!(
                ring.add(&ring.add(&a, &b), &c),
                ring.add(&a, &ring.add(&b, &c))
            );
            assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            assert_eq!(
                ring.mul(&ring.mul(&a, &b), &c),
                ring.mul(&a, &ring.mul(&b, &c))
            );
            assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
            assert_eq!(
                ring.mul(&ring.add(&b, &c), &a),
                ring.add(&ring.mul(&b, &a), &ring.mul(&c, &a))
            );
            if !ring.is_zero(&a) {
                let ai = ring.inv(&a).unwrap();
                assert_eq!(ring.mul(&a, &ai), ring.one());
                assert_eq!(ring.mul(&ai, &a), ring.one());
            }
        }
        assert_eq!(ring.inv(&ring.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn laws_hold_for_every_instance() {
        ring_laws(&Rationals, 1);
        ring_laws(&PrimeField::new(2).unwrap(), 2);
        ring_laws(&PrimeField::new(7).unwrap(), 3);
        ring_laws(&Quaternions, 4);
        ring_laws(&Opposite(Quaternions), 5);
        ring_laws(&Opposite(PrimeField::new(3).unwrap()), 6);
    }

    #[test]
    fn opposite_reverses_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let op = Opposite(Quaternions);
        let opop = Opposite(Opposite(Quaternions));
        for _ in 0..500 {
            let a = Quaternions.random_element(&mut rng);
            let b = Quaternions.random_element(&mut rng);
            assert_eq!(op.mul(&a, &b), Quaternions.mul(&b, &a));
            assert_eq!(opop.mul(&a, &b), Quaternions.mul(&a, &b));
            assert_eq!(opop.add(&a, &b), Quaternions.add(&a, &b));
            if !Quaternions.is_zero(&a) {
                assert_eq!(opop.inv(&a).unwrap(), Quaternions.inv(&a).unwrap());
            }
        }
    }

    #[test]
    fn quaternions_do_not_commute() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        assert_ne!(Quaternions.mul(&i, &j), Quaternions.mul(&j, &i));
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Q", "GF(7)", "H(Q)", "op(H(Q))", "op(op(GF(2)))"] {
            let d: RingDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("GF(8)".parse::<RingDescriptor>().is_err());
        assert!("GF(1)".parse::<RingDescriptor>().is_err());
        assert!("Z".parse::<RingDescriptor>().is_err());
        assert!("op(GF(5))".parse::<RingDescriptor>().unwrap().is_finite());
        assert!(!"op(Q)".parse::<RingDescriptor>().unwrap().is_finite());
    }

    #[test]
    fn enumeration() {
        assert_eq!(PrimeField::new(2).unwrap().enumerate_elements().unwrap(), vec![0, 1]);
        assert_eq!(PrimeField::new(3).unwrap().enumerate_elements().unwrap(), vec![0, 1, 2]);
        assert!(matches!(Rationals.enumerate_elements(), Err(Error::Unsupported(_))));
        assert!(Quaternions.enumerate_elements().is_err());
        assert_eq!(
            Opposite(PrimeField::new(2).unwrap()).enumerate_elements().unwrap(),
            vec![0, 1]
        );
    }
}
