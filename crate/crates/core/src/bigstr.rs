//! Serde adapters writing big integers as decimal strings, so JSON readers
//! never lose precision.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::formulas::PerType;

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let s = String::deserialize(d)?;
    BigUint::from_str(&s).map_err(D::Error::custom)
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(ToString::to_string).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| BigUint::from_str(&s).map_err(D::Error::custom))
            .transpose()
    }
}

pub mod opt_per_type {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<PerType<BigUint>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|p| PerType {
                i: p.i.to_string(),
                ii: p.ii.to_string(),
                iii: p.iii.to_string(),
            })
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<PerType<BigUint>>, D::Error> {
        let parse = |s: &str| BigUint::from_str(s).map_err(D::Error::custom);
        match Option::<PerType<String>>::deserialize(d)? {
            None => Ok(None),
            Some(p) => Ok(Some(PerType {
                i: parse(&p.i)?,
                ii: parse(&p.ii)?,
                iii: parse(&p.iii)?,
            })),
        }
    }
}
