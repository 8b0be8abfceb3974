// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Serde adapters for exact integers: values inside the IEEE-754 safe range
//! (|x| ≤ 2^53 - 1) are written as JSON numbers, larger ones as decimal
//! strings. Both forms are accepted on input.

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

pub const MAX_SAFE: i64 = (1 << 53) - 1;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(i64),
    Str(String),
}

fn to_repr(x: &BigInt) -> Repr {
    match i64::try_from(x) {
        Ok(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => Repr::Int(v),
        _ => Repr::Str(x.to_string()),
    }
}

fn from_repr<E: de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Int(v) => Ok(BigInt::from(v)),
        Repr::Str(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| E::custom(format!("not an integer: {s:?}"))),
    }
}

/// Wrapper implementing the adapter, for use inside containers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_repr(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        from_repr(Repr::deserialize(d)?).map(JsonInt)
    }
}

impl From<BigInt> for JsonInt {
    fn from(x: BigInt) -> Self {
        JsonInt(x)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(x: &BigInt) -> Self {
        JsonInt(x.clone())
    }
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }
}

pub fn ints(xs: &[BigInt]) -> Vec<JsonInt> {
    xs.iter().map(JsonInt::from).collect()
}

pub fn unints(xs: Vec<JsonInt>) -> Vec<BigInt> {
    xs.into_iter().map(|x| x.0).collect()
}
