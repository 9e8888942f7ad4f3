use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::rational::{format_rational, small_rational};
use super::{DivisionRing, RingDescriptor};
use crate::{Error, Result};

/// `re + i·i + j·j + k·k` with rational components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub re: BigRational,
    pub i: BigRational,
    pub j: BigRational,
    pub k: BigRational,
}

impl Quaternion {
    pub fn new(re: BigRational, i: BigRational, j: BigRational, k: BigRational) -> Self {
        Quaternion { re, i, j, k }
    }

    pub fn from_ints(re: i64, i: i64, j: i64, k: i64) -> Self {
        let r = |x: i64| BigRational::from_integer(x.into());
        Quaternion::new(r(re), r(i), r(j), r(k))
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.re.clone(), -&self.i, -&self.j, -&self.k)
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.i * &self.i + &self.j * &self.j + &self.k * &self.k
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.components().map(format_rational);
        write!(f, "[{a}, {b}, {c}, {d}]")
    }
}

/// The rational Hamilton quaternions, a noncommutative division ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Quaternions;

impl DivisionRing for Quaternions {
    type Elem = Quaternion;

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }

    fn one(&self) -> Quaternion {
        Quaternion::one()
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(&a.re + &b.re, &a.i + &b.i, &a.j + &b.j, &a.k + &b.k)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        Quaternion::new(-&a.re, -&a.i, -&a.j, -&a.k)
    }

    fn sub(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(&a.re - &b.re, &a.i - &b.i, &a.j - &b.j, &a.k - &b.k)
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&a.re, &a.i, &a.j, &a.k);
        let (a2, b2, c2, d2) = (&b.re, &b.i, &b.j, &b.k);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    fn inv(&self, a: &Quaternion) -> Result<Quaternion> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = a.norm();
        let c = a.conjugate();
        Ok(Quaternion::new(&c.re / &n, &c.i / &n, &c.j / &n, &c.k / &n))
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Quaternions
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Quaternion {
        // a quarter of the samples are pure units so that sparse patterns show up
        if rng.gen_ratio(1, 4) {
            let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
            let u = units[rng.gen_range(0..4)].clone();
            return if rng.gen() { u } else { self.neg(&u) };
        }
        Quaternion::new(
            small_rational(rng, 3, 2),
            small_rational(rng, 3, 2),
            small_rational(rng, 3, 2),
            small_rational(rng, 3, 2),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let h = Quaternions;
        let minus_one = h.neg(&h.one());
        assert_eq!(h.mul(&i, &i), minus_one);
        assert_eq!(h.mul(&j, &j), minus_one);
        assert_eq!(h.mul(&k, &k), minus_one);
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &k), i);
        assert_eq!(h.mul(&k, &i), j);
        assert_eq!(h.mul(&j, &i), h.neg(&k));
    }

    #[test]
    fn inverse_of_unit() {
        let h = Quaternions;
        assert_eq!(h.inv(&Quaternion::i()).unwrap(), h.neg(&Quaternion::i()));
        let q = Quaternion::from_ints(1, 2, 3, 4);
        let qi = h.inv(&q).unwrap();
        assert_eq!(h.mul(&q, &qi), h.one());
        assert_eq!(qi.to_string(), "[1/30, -1/15, -1/10, -2/15]");
    }

    #[test]
    fn opposite_product() {
        let op = super::super::Opposite(Quaternions);
        assert_eq!(op.mul(&Quaternion::i(), &Quaternion::j()), Quaternions.neg(&Quaternion::k()));
    }
}
