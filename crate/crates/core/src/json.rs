//! JSON document formats.
//!
//! A matrix document is `{"ring": "Q" | "GF(p)" | "H(Q)", "rows": m,
//! "cols": n, "entries": [[...], ...]}`. Rational entries are strings
//! `"n"` or `"p/q"` (integers are accepted on input), prime field entries
//! are integers (strings accepted), and quaternion entries are arrays of
//! four rationals `[a, b, c, d]` for `a + bi + cj + dk`. A generators
//! document replaces `entries` by `"generators": [entries, ...]`; a plain
//! matrix document is read as a single generator.
//!
//! Output uses sorted object keys and canonical number formatting, so equal
//! inputs produce byte-identical documents. Pivot and block indices in
//! output are 1-based.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::bimod::BimoduleDescriptor;
use crate::echelon::EchelonMatrix;
use crate::matrix::Matrix;
use crate::nest::NestTuple;
use crate::ring::{format_rational, parse_rational, DivisionRing, PrimeField, Quaternion, Quaternions, Rationals};
use crate::submod_full::FullSubmoduleRep;
use crate::{Error, Result, RingDescriptor};

/// Rings whose elements have a JSON form.
pub trait JsonRing: DivisionRing {
    fn elem_to_json(&self, e: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigRational::from_integer(BigInt::from(i))),
            None => Err(Error::Parse(format!("rational entries must be integers or strings, got {n}"))),
        },
        other => Err(Error::Parse(format!("bad rational entry {other}"))),
    }
}

impl JsonRing for Rationals {
    fn elem_to_json(&self, e: &BigRational) -> Value {
        Value::String(format_rational(e))
    }

    fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
        rational_from_json(v)
    }
}

impl JsonRing for PrimeField {
    fn elem_to_json(&self, e: &u64) -> Value {
        json!(e)
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        let x: i64 = match v {
            Value::Number(n) => n.as_i64().ok_or_else(|| Error::Parse(format!("bad field entry {n}")))?,
            Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("bad field entry {s:?}")))?,
            other => return Err(Error::Parse(format!("bad field entry {other}"))),
        };
        Ok(self.element(x))
    }
}

impl JsonRing for Quaternions {
    fn elem_to_json(&self, e: &Quaternion) -> Value {
        Value::Array(e.components().iter().map(|c| Value::String(format_rational(c))).collect())
    }

    fn elem_from_json(&self, v: &Value) -> Result<Quaternion> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b, c, d]) => Ok(Quaternion::new(
                rational_from_json(a)?,
                rational_from_json(b)?,
                rational_from_json(c)?,
                rational_from_json(d)?,
            )),
            _ => Err(Error::Parse(format!("quaternion entries are [a, b, c, d], got {v}"))),
        }
    }
}

pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// Stable text form of an output document.
pub fn to_text(v: &Value) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

pub fn ring_of(doc: &Value) -> Result<RingDescriptor> {
    doc.get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("document needs a \"ring\" string".into()))?
        .parse()
}

fn usize_field(doc: &Value, key: &str) -> Result<usize> {
    doc.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("document needs a nonnegative integer {key:?}")))
}

fn check_ring<R: DivisionRing>(ring: &R, doc: &Value) -> Result<()> {
    let found = ring_of(doc)?;
    if found != ring.descriptor() {
        return Err(Error::RingMismatch(ring.descriptor().to_string(), found.to_string()));
    }
    Ok(())
}

fn entries_from_json<R: JsonRing>(ring: &R, rows: usize, cols: usize, v: &Value) -> Result<Matrix<R>> {
    let list = v.as_array().ok_or_else(|| Error::Parse("entries must be an array of rows".into()))?;
    if list.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", list.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in list {
        let row = row.as_array().ok_or_else(|| Error::Parse("each row must be an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!("expected {cols} columns, found {}", row.len())));
        }
        for e in row {
            entries.push(ring.elem_from_json(e)?);
        }
    }
    Matrix::new(ring.clone(), rows, cols, entries)
}

pub fn matrix_from_json<R: JsonRing>(ring: &R, doc: &Value) -> Result<Matrix<R>> {
    check_ring(ring, doc)?;
    let (rows, cols) = (usize_field(doc, "rows")?, usize_field(doc, "cols")?);
    let entries = doc.get("entries").ok_or_else(|| Error::Parse("matrix document needs \"entries\"".into()))?;
    entries_from_json(ring, rows, cols, entries)
}

/// Generators and their common `(rows, cols)`.
pub type Generators<R> = (Vec<Matrix<R>>, (usize, usize));

pub fn generators_from_json<R: JsonRing>(ring: &R, doc: &Value) -> Result<Generators<R>> {
    check_ring(ring, doc)?;
    let (rows, cols) = (usize_field(doc, "rows")?, usize_field(doc, "cols")?);
    let gens = match (doc.get("generators"), doc.get("entries")) {
        (Some(Value::Array(list)), _) => {
            list.iter().map(|g| entries_from_json(ring, rows, cols, g)).collect::<Result<_>>()?
        }
        (Some(_), _) => return Err(Error::Parse("\"generators\" must be an array".into())),
        (None, Some(e)) => vec![entries_from_json(ring, rows, cols, e)?],
        (None, None) => return Err(Error::Parse("document needs \"generators\" or \"entries\"".into())),
    };
    Ok((gens, (rows, cols)))
}

fn entries_to_json<R: JsonRing>(m: &Matrix<R>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|e| m.ring().elem_to_json(e)).collect()))
            .collect(),
    )
}

pub fn matrix_to_json<R: JsonRing>(m: &Matrix<R>) -> Value {
    json!({
        "ring": m.ring().descriptor().to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries_to_json(m),
    })
}

pub fn echelon_to_json<R: JsonRing>(e: &EchelonMatrix<R>) -> Value {
    json!({
        "side": e.side().to_string(),
        "rank": e.rank(),
        "pivots": e.pivots().iter().map(|p| p + 1).collect::<Vec<_>>(),
        "form": matrix_to_json(e.mat()),
    })
}

pub fn submodule_to_json<R: JsonRing>(s: &FullSubmoduleRep<R>) -> Value {
    let (m, n) = s.ambient();
    let generator = s.principal_generator().ok().map(|g| matrix_to_json(&g));
    json!({
        "side": s.side().to_string(),
        "ambient": format!("{m}x{n}"),
        "rep": matrix_to_json(s.rep().mat()),
        "rank": s.rank(),
        "dim": s.dim(),
        "principal": s.is_principal(),
        "generator": generator,
    })
}

pub fn tuple_to_json<R: JsonRing>(t: &NestTuple<R>) -> Value {
    json!({
        "side": t.side().to_string(),
        "shape": t.shape().to_string(),
        "reps": t.reps().iter().map(|r| matrix_to_json(r.mat())).collect::<Vec<_>>(),
        "ranks": t.ranks(),
        "k": t.k(),
    })
}

pub fn descriptor_to_json(d: &BimoduleDescriptor) -> Value {
    json!({ "i": d.i(), "js": d.js() })
}

pub fn error_to_json(e: &Error) -> Value {
    let mut m = Map::new();
    m.insert("error".into(), Value::String(e.to_string()));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::echelon;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_round_trip_and_format() {
        let doc = parse_document(r#"{"ring":"Q","rows":1,"cols":3,"entries":[["2/4", -3, "0"]]}"#).unwrap();
        let m = matrix_from_json(&Rationals, &doc).unwrap();
        let out = to_text(&matrix_to_json(&m));
        assert_eq!(out, r#"{"cols":3,"entries":[["1/2","-3","0"]],"ring":"Q","rows":1}"#);
        assert_eq!(matrix_from_json(&Rationals, &parse_document(&out).unwrap()).unwrap(), m);
    }

    #[test]
    fn prime_and_quaternion_round_trip() {
        let doc = parse_document(r#"{"ring":"GF(7)","rows":1,"cols":2,"entries":[[9,"-1"]]}"#).unwrap();
        let f = PrimeField::new(7).unwrap();
        let m = matrix_from_json(&f, &doc).unwrap();
        assert_eq!(m.entries(), &[2, 6]);
        assert_eq!(matrix_from_json(&f, &matrix_to_json(&m)).unwrap(), m);

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q = Matrix::random(Quaternions, 2, 2, &mut rng);
        let text = to_text(&matrix_to_json(&q));
        assert_eq!(matrix_from_json(&Quaternions, &parse_document(&text).unwrap()).unwrap(), q);
    }

    #[test]
    fn malformed_documents_are_parse_errors() {
        for text in [
            "not json",
            r#"{"rows":1,"cols":1,"entries":[[1]]}"#,
            r#"{"ring":"Q","rows":2,"cols":1,"entries":[[1]]}"#,
            r#"{"ring":"Q","rows":1,"cols":1,"entries":[[true]]}"#,
            r#"{"ring":"GF(4)","rows":1,"cols":1,"entries":[[1]]}"#,
            r#"{"ring":"H(Q)","rows":1,"cols":1,"entries":[["1"]]}"#,
        ] {
            let err = parse_document(text).and_then(|d| {
                let ring = ring_of(&d)?;
                match ring {
                    RingDescriptor::Quaternions => matrix_from_json(&Quaternions, &d).map(|_| ()),
                    _ => matrix_from_json(&Rationals, &d).map(|_| ()),
                }
            });
            assert!(err.unwrap_err().is_usage(), "{text}");
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let doc = parse_document(r#"{"ring":"GF(2)","rows":1,"cols":1,"entries":[[1]]}"#).unwrap();
        assert!(matches!(matrix_from_json(&Rationals, &doc), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn generators_document() {
        let doc = parse_document(r#"{"ring":"GF(2)","rows":1,"cols":2,"generators":[[[1,0]],[[0,1]]]}"#).unwrap();
        let f = PrimeField::new(2).unwrap();
        let (gens, shape) = generators_from_json(&f, &doc).unwrap();
        assert_eq!((gens.len(), shape), (2, (1, 2)));
        let doc = parse_document(r#"{"ring":"GF(2)","rows":1,"cols":2,"entries":[[1,0]]}"#).unwrap();
        assert_eq!(generators_from_json(&f, &doc).unwrap().0.len(), 1);
    }

    #[test]
    fn echelon_output_uses_one_based_pivots() {
        let m = Matrix::from_rows(Rationals, vec![vec![BigRational::from_integer(0.into()), BigRational::from_integer(3.into())]]).unwrap();
        let v = echelon_to_json(&echelon::lrref(&m));
        assert_eq!(v["pivots"], json!([2]));
        assert_eq!(v["form"]["entries"], json!([["0", "1"]]));
    }
}
