//! Exact computational algebra for one-sided submodules, subbimodules and
//! ideals of rectangular matrix modules and nest modules over division rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: the [`DivisionRing`](ring::DivisionRing) abstraction with the
//!   rationals, prime fields, rational quaternions and the opposite ring.
//! * [`matrix`]: dense exact matrices, block shapes and the opposite-transpose.
//! * [`echelon`]: left-row / right-column reduced echelon forms, containment,
//!   join and meet.
//! * [`submod_full`]: one-sided submodules of `M_{m×n}(D)` via their canonical
//!   echelon representative.
//! * [`nest`]: one-sided submodules of nest modules `T_(M,N)` as tuples of
//!   echelon matrices, generation and principality.
//! * [`bimod`]: subbimodules of nest modules and products of left ideals.
//! * [`oracle`]: brute-force enumeration over prime fields used as ground truth.
//! * [`json`] and [`app`]: the document formats and command layer shared by the
//!   CLI and the C bindings.

pub mod app;
pub mod bimod;
pub mod echelon;
mod error;
pub mod json;
pub mod matrix;
pub mod nest;
pub mod oracle;
pub mod ring;
pub mod submod_full;

pub use error::{Error, Result};
pub use matrix::{BlockShape, Matrix};
pub use ring::{DivisionRing, Opposite, PrimeField, Quaternions, Rationals, RingDescriptor};

/// Which side a module (or echelon form) acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Parse(format!("unknown side {other:?}"))),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}
