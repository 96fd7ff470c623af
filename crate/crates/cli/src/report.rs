//! Machine-readable reports with canonical JSON encoding: fixed key order,
//! no floats, and integer counts rendered as decimal strings once they
//! exceed 2^53 so they survive any JSON consumer.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Largest count emitted as a bare JSON number.
const MAX_JSON_INT: u64 = 1 << 53;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum JsonCount {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for JsonCount {
    fn from(v: &BigUint) -> JsonCount {
        match v.to_u64() {
            Some(small) if small <= MAX_JSON_INT => JsonCount::Small(small),
            _ => JsonCount::Big(v.to_string()),
        }
    }
}

impl TryFrom<&JsonCount> for BigUint {
    type Error = String;

    fn try_from(v: &JsonCount) -> Result<BigUint, String> {
        match v {
            JsonCount::Small(s) => Ok(BigUint::from(*s)),
            JsonCount::Big(s) => s
                .parse::<BigUint>()
                .map_err(|e| format!("bad integer string {s:?}: {e}")),
        }
    }
}

pub mod big_counts {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let counts: Vec<JsonCount> = v.iter().map(JsonCount::from).collect();
        counts.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let counts = Vec::<JsonCount>::deserialize(d)?;
        counts
            .iter()
            .map(|c| BigUint::try_from(c).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod opt_big_count {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(JsonCount::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let count = Option::<JsonCount>::deserialize(d)?;
        count
            .as_ref()
            .map(|c| BigUint::try_from(c).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Theory-only prediction as reported next to empirical results.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PredictionReport {
    pub klass: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(
        with = "opt_big_count",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub a_min: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
}

/// The full classification report for one code.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub defect: i64,
    pub defect_dual: i64,
    pub klass: String,
    #[serde(with = "big_counts")]
    pub weight_distribution: Vec<BigUint>,
    #[serde(with = "big_counts")]
    pub dual_distribution: Vec<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prediction: Option<PredictionReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prediction_matches: Option<bool>,
    pub timing_ms: u64,
}
