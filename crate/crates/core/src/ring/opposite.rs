use rand::Rng;

use super::{DivisionRing, RingDescriptor};
use crate::Result;

/// The opposite ring: same elements, `mul(a, b) = inner.mul(b, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Opposite<R>(pub R);

impl<R: DivisionRing> Opposite<R> {
    pub fn inner(&self) -> &R {
        &self.0
    }
}

impl<R: DivisionRing> DivisionRing for Opposite<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.0.zero()
    }

    fn one(&self) -> R::Elem {
        self.0.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.add(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.0.neg(a)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.sub(a, b)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.mul(b, a)
    }

    fn inv(&self, a: &R::Elem) -> Result<R::Elem> {
        self.0.inv(a)
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.0.is_zero(a)
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Opposite(Box::new(self.0.descriptor()))
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> R::Elem {
        self.0.random_element(rng)
    }

    fn enumerate_elements(&self) -> Result<Vec<R::Elem>> {
        self.0.enumerate_elements()
    }
}
