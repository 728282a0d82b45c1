//! Serialization helpers: big integers render as decimal strings so reports
//! stay exact regardless of magnitude.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};

use crate::matrix::IntegerMatrix;

pub fn bigint_as_string<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn bigints_as_strings<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn matrix_as_rows<S: Serializer>(m: &IntegerMatrix, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect();
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for row in rows {
        seq.serialize_element(&row)?;
    }
    seq.end()
}

pub fn exponents_as_strings<S: Serializer>(
    xs: &[Vec<BigInt>],
    s: S,
) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = xs
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect();
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for row in rows {
        seq.serialize_element(&row)?;
    }
    seq.end()
}
