//! JSON helpers for arbitrary-precision integers.
//!
//! Integers that fit in an `i64` are written as plain JSON numbers; larger ones
//! are written as decimal strings. Both forms are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInt {
    Small(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match RawInt::deserialize(deserializer)? {
            RawInt::Small(v) => Ok(JsonInt(BigInt::from(v))),
            RawInt::Text(s) => BigInt::from_str(s.trim())
                .map(JsonInt)
                .map_err(serde::de::Error::custom),
        }
    }
}

pub(crate) fn to_json_vec(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub(crate) fn from_json_vec(v: Vec<JsonInt>) -> Vec<BigInt> {
    v.into_iter().map(|x| x.0).collect()
}
