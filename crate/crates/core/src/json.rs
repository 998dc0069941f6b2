//! JSON helpers for exact integers.

use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{Number, Value};

use crate::error::{Error, Result};

/// Big integers as JSON number tokens (no float rounding).
pub fn big_numbers(v: &[BigUint]) -> Vec<Number> {
    v.iter()
        .map(|b| Number::from_str(&b.to_string()).expect("decimal digits form a JSON number"))
        .collect()
}

/// Reads an array of nonnegative JSON integers back into exact values.
pub fn parse_big_array(value: &Value) -> Result<Vec<BigUint>> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Argument("expected a JSON array".into()))?;
    arr.iter()
        .map(|x| match x {
            Value::Number(n) => BigUint::from_str(&n.to_string())
                .map_err(|_| Error::Argument(format!("not a nonnegative integer: {n}"))),
            other => Err(Error::Argument(format!("not a number: {other}"))),
        })
        .collect()
}
