//! Serde adapters writing `BigInt`s as decimal strings. Reading accepts
//! strings or plain JSON integers.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Lenient {
    Str(String),
    Int(i64),
    Uint(u64),
}

impl Lenient {
    fn into_big<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            Lenient::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| E::custom(format!("not an integer: {s:?}"))),
            Lenient::Int(i) => Ok(BigInt::from(i)),
            Lenient::Uint(u) => Ok(BigInt::from(u)),
        }
    }
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        x.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Lenient::deserialize(d)?.into_big()
    }
}

pub mod opt_int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(|v| v.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<Lenient>::deserialize(d)?
            .map(Lenient::into_big)
            .transpose()
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Lenient>::deserialize(d)?
            .into_iter()
            .map(Lenient::into_big)
            .collect()
    }
}

pub mod opt_vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref()
            .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
        match Option::<Vec<Lenient>>::deserialize(d)? {
            None => Ok(None),
            Some(v) => v
                .into_iter()
                .map(Lenient::into_big)
                .collect::<Result<_, _>>()
                .map(Some),
        }
    }
}

pub mod mat {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<Lenient>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(Lenient::into_big).collect())
            .collect()
    }
}
