//! Serde helpers that write big integers as plain JSON numbers whenever they
//! fit in an `i64`, and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(i64),
    Text(String),
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(k) => s.serialize_i64(k),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Int(k) => Ok(BigInt::from(k)),
        Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
    }
}
