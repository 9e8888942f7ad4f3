use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{DivisionRing, RingDescriptor};
use crate::{Error, Result};

/// The field of rational numbers with arbitrary-precision components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl DivisionRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        small_rational(rng, 4, 3)
    }
}

pub(crate) fn small_rational<G: Rng + ?Sized>(rng: &mut G, num: i64, den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-num..=num)),
        BigInt::from(rng.gen_range(1..=den)),
    )
}

/// Canonical text form: `n` for integers, otherwise `p/q` with `q > 0` in
/// lowest terms.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        debug_assert!(x.denom().is_positive());
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Rationals.mul(&q("2/3"), &q("3/4")), q("1/2"));
        assert_eq!(Rationals.inv(&q("-4/9")).unwrap(), q("-9/4"));
    }

    #[test]
    fn canonical_formatting() {
        assert_eq!(format_rational(&q("6/-4")), "-3/2");
        assert_eq!(format_rational(&q("8/4")), "2");
        assert_eq!(format_rational(&q("0/5")), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
