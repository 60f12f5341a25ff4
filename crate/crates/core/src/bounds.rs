//! Exact values of the decomposition constants.
//!
//! Everything is computed with arbitrary-precision integers; the constants
//! leave the 64-bit range as soon as the degree parameter reaches 2.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// `d(k) = (2k+1)^(8k+4) · k² · (k+1)`.
pub fn d_of_k(k: u64) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::InvalidParameter("d(k) needs k >= 1".into()));
    }
    let base = BigUint::from(2 * k + 1);
    let exponent = u32::try_from(8 * k + 4)
        .map_err(|_| Error::InvalidParameter(format!("exponent for k = {k} is too large")))?;
    Ok(base.pow(exponent) * BigUint::from(k) * BigUint::from(k) * BigUint::from(k + 1))
}

fn as_decimal<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

fn from_decimal<'de, D>(d: D) -> std::result::Result<BigUint, D::Error>
where
    D: serde::Deserializer<'de>,
{
    let text = String::deserialize(d)?;
    text.parse::<BigUint>().map_err(serde::de::Error::custom)
}

/// Constants of the linear decomposition theorem for a pattern graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem31Constants {
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub m: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub a: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub a0: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub k: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub s: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub w0: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub w: BigUint,
    #[serde(serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub p: BigUint,
}

pub fn theorem31_constants(f: &Multigraph) -> Theorem31Constants {
    let edges = BigUint::from(f.edge_count());
    let vertices = BigUint::from(f.vertex_count());
    let k_small = f.max_degree().max(3) as u64;
    let d = d_of_k(k_small).expect("k >= 3");

    let m = BigUint::from(2u32) * &edges;
    let a = BigUint::from(4u32) * &vertices;
    let a0 = &a + 1u32;
    let s = &d * &vertices;
    let w0 = &m * s.pow(3) + s.pow(2);
    let w = std::cmp::max(
        BigUint::from(2u32) * &a0 * &s * &w0,
        &w0 + &a0 * &s,
    );
    let p = BigUint::from(3u32) * &d * &vertices + 1u32;
    Theorem31Constants {
        m,
        a,
        a0,
        k: BigUint::from(k_small),
        s,
        w0,
        w,
        p,
    }
}

/// Clique size excluded when every `d`-edge-connected set is
/// `(a, w, p)`-linear: `max{2w+2, (2p+1)a+1, d+1}`.
pub fn converse_n(d: u64, a: u64, w: u64, p: u64) -> BigUint {
    let [d, a, w, p] = [d, a, w, p].map(BigUint::from);
    let two = BigUint::from(2u32);
    [
        &two * &w + 2u32,
        (&two * &p + 1u32) * &a + 1u32,
        d + 1u32,
    ]
    .into_iter()
    .max()
    .expect("three candidates")
}

/// Clique size excluded by a tree-cut decomposition of adhesion below
/// `alpha` with `alpha`-basic torsos: `2α² + 2α + 1`.
pub fn converse_n_alpha(alpha: u64) -> BigUint {
    let alpha = BigUint::from(alpha);
    BigUint::from(2u32) * &alpha * &alpha + BigUint::from(2u32) * &alpha + 1u32
}
