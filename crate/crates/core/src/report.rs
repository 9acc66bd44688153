//! Serialisation helpers shared by every report type.

use num_bigint::BigInt;
use serde::Serializer;

/// Version tag embedded in every JSON document.
pub const REPORT_SCHEMA: &str = "chromakit.report/1";

/// Big integers are written as decimal strings so no JSON reader rounds them.
pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}
