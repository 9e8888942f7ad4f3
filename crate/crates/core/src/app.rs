//! Command layer shared by the `nestlat` binary and the C bindings.
//!
//! Every command takes document text and returns an output document.
//! [`Error::is_usage`] separates malformed input from mathematical failures.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bimod::{self, BimoduleDescriptor};
use crate::echelon;
use crate::json::{self, JsonRing};
use crate::matrix::BlockShape;
use crate::nest::{self, NestTuple};
use crate::oracle::{self, ClosureKind, ExplicitModule, OracleSpace};
use crate::ring::{DivisionRing, PrimeField, Quaternions, Rationals};
use crate::submod_full;
use crate::{Error, Result, RingDescriptor, Side};

/// Runs `$body` with `$ring` bound to the concrete ring of `$desc`.
macro_rules! with_ring {
    ($desc:expr, |$ring:ident| $body:expr) => {
        match $desc {
            RingDescriptor::Rationals => {
                let $ring = Rationals;
                $body
            }
            RingDescriptor::PrimeField(p) => {
                let $ring = PrimeField::new(p)?;
                $body
            }
            RingDescriptor::Quaternions => {
                let $ring = Quaternions;
                $body
            }
            other @ RingDescriptor::Opposite(_) => {
                Err(Error::Unsupported(format!("documents over {other} are not supported")))
            }
        }
    };
}

/// Checks that `text` is a well-formed matrix document.
pub fn validate_matrix(text: &str) -> Result<Value> {
    let doc = json::parse_document(text)?;
    with_ring!(json::ring_of(&doc)?, |ring| {
        let m = json::matrix_from_json(&ring, &doc)?;
        Ok(json::matrix_to_json(&m))
    })
}

pub fn echelon(text: &str, side: Side) -> Result<Value> {
    let doc = json::parse_document(text)?;
    with_ring!(json::ring_of(&doc)?, |ring| {
        let m = json::matrix_from_json(&ring, &doc)?;
        Ok(json::echelon_to_json(&echelon::reduce(&m, side)))
    })
}

/// Whether the left row space (right column space) of `a` lies in that of `b`.
pub fn space_leq(a: &str, b: &str, side: Side) -> Result<bool> {
    let (da, db) = (json::parse_document(a)?, json::parse_document(b)?);
    with_ring!(json::ring_of(&da)?, |ring| {
        let ma = json::matrix_from_json(&ring, &da)?;
        let mb = json::matrix_from_json(&ring, &db)?;
        echelon::space_leq(&ma, &mb, side)
    })
}

pub fn phi(text: &str, ambient: (usize, usize), side: Side) -> Result<Value> {
    let doc = json::parse_document(text)?;
    with_ring!(json::ring_of(&doc)?, |ring| phi_in(ring, &doc, ambient, side))
}

fn phi_in<R: JsonRing>(ring: R, doc: &Value, ambient: (usize, usize), side: Side) -> Result<Value> {
    let (gens, shape) = json::generators_from_json(&ring, doc)?;
    if shape != ambient {
        return Err(Error::ShapeMismatch(format!(
            "generators are {}x{} but the ambient is {}x{}",
            shape.0, shape.1, ambient.0, ambient.1
        )));
    }
    let s = submod_full::phi_from_generators(ring.clone(), &gens, ambient, side)?;
    let mut out = json::submodule_to_json(&s);
    out["ring"] = json!(ring.descriptor().to_string());
    Ok(out)
}

fn check_shape_matches(shape: &BlockShape, dims: (usize, usize)) -> Result<()> {
    if (shape.rows(), shape.cols()) != dims {
        return Err(Error::ShapeMismatch(format!(
            "generators are {}x{} but {shape} is {}x{}",
            dims.0,
            dims.1,
            shape.rows(),
            shape.cols()
        )));
    }
    Ok(())
}

fn nest_tuple_in<R: JsonRing>(ring: &R, doc: &Value, shape: &BlockShape, side: Side) -> Result<NestTuple<R>> {
    let (gens, dims) = json::generators_from_json(ring, doc)?;
    check_shape_matches(shape, dims)?;
    nest::nest_phi_from_generators(ring.clone(), &gens, shape, side)
}

pub fn nest_phi(text: &str, shape: &BlockShape, side: Side) -> Result<Value> {
    let doc = json::parse_document(text)?;
    with_ring!(json::ring_of(&doc)?, |ring| {
        let t = nest_tuple_in(&ring, &doc, shape, side)?;
        let principal = t.is_principal()?;
        let generator = if principal { Some(json::matrix_to_json(&t.principal_generator()?)) } else { None };
        Ok(json!({
            "ring": ring.descriptor().to_string(),
            "tuple": json::tuple_to_json(&t),
            "principal": principal,
            "generator": generator,
        }))
    })
}

pub fn classify_bimodule(text: &str, shape: &BlockShape) -> Result<Value> {
    let doc = json::parse_document(text)?;
    with_ring!(json::ring_of(&doc)?, |ring| {
        let (gens, dims) = json::generators_from_json(&ring, &doc)?;
        check_shape_matches(shape, dims)?;
        let d = bimod::bimodule_closure(&gens, shape)?;
        Ok(json!({
            "ring": ring.descriptor().to_string(),
            "shape": shape.to_string(),
            "descriptor": json::descriptor_to_json(&d),
            "tuple": json::tuple_to_json(&bimod::descriptor_to_tuple(ring, &d)?),
            "generator": json::matrix_to_json(&bimod::bimodule_principal_generator(ring, &d)?),
        }))
    })
}

/// Product of the one-sided ideals of `T_N` generated by the two documents,
/// alongside the entrywise reading of the product on tuples.
pub fn product(left: &str, right: &str, shape: &BlockShape, side: Side) -> Result<Value> {
    let (dl, dr) = (json::parse_document(left)?, json::parse_document(right)?);
    with_ring!(json::ring_of(&dl)?, |ring| {
        let t1 = nest_tuple_in(&ring, &dl, shape, side)?;
        let t2 = nest_tuple_in(&ring, &dr, shape, side)?;
        let prod = bimod::ideal_product(&t1, &t2)?;
        let cw = bimod::componentwise_star(&t1, &t2)?;
        Ok(json!({
            "ring": ring.descriptor().to_string(),
            "tuple": json::tuple_to_json(&prod),
            "componentwise_star": json::tuple_to_json(&cw),
            "agree": prod == cw,
        }))
    })
}

/// Result of [`enumerate`]: the summary document and, when requested, the
/// Hasse diagram.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub summary: Value,
    pub dot: Option<String>,
}

/// Canonical description of an oracle module, used for stable labels.
fn canonical_json(field: &PrimeField, m: &ExplicitModule) -> Result<Value> {
    let gens = m.elements();
    match m.kind() {
        ClosureKind::Left | ClosureKind::Right => {
            let side = if m.kind() == ClosureKind::Left { Side::Left } else { Side::Right };
            let t = nest::nest_phi_from_generators(*field, &gens, m.shape(), side)?;
            Ok(json::tuple_to_json(&t))
        }
        ClosureKind::Bimodule => {
            let d: BimoduleDescriptor = bimod::bimodule_closure(&gens, m.shape())?;
            Ok(json::descriptor_to_json(&d))
        }
    }
}

fn label(v: &Value) -> String {
    let digest = Sha256::digest(json::to_text(v).as_bytes());
    digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

pub fn enumerate(ring: &RingDescriptor, shape: &BlockShape, kind: ClosureKind, want_dot: bool) -> Result<Enumeration> {
    let RingDescriptor::PrimeField(p) = ring else {
        return Err(Error::Unsupported(format!("enumeration needs a prime field, got {ring}")));
    };
    let field = PrimeField::new(*p)?;
    let space = OracleSpace::new(&field, shape, kind)?;
    let modules = space.enumerate_submodules();
    let canon: Vec<Value> = modules.iter().map(|m| canonical_json(&field, m)).collect::<Result<_>>()?;
    let labels: Vec<String> = canon.iter().map(label).collect();
    let listing: Vec<Value> = modules
        .iter()
        .zip(&canon)
        .zip(&labels)
        .map(|((m, c), l)| json!({ "hash": l, "size": m.size(), "dim": m.dim(), "canonical": c }))
        .collect();
    let summary = json!({
        "ring": ring.to_string(),
        "shape": shape.to_string(),
        "kind": kind.to_string(),
        "count": modules.len(),
        "modules": listing,
    });
    let dot = want_dot.then(|| oracle::hasse_dot(&modules, &labels));
    Ok(Enumeration { summary, dot })
}
