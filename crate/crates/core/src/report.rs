//! JSON encoding shared by every report.
//!
//! Rationals are written as bare JSON integers when integral and as `"p/q"`
//! strings (lowest terms, `q > 0`) otherwise.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::cycles::{Cycle, RationalCycle};

/// Version of the JSON layout emitted by the CLI.
pub const SCHEMA_VERSION: u32 = 1;

pub fn rational_value(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.to_integer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(q.to_string())
}

pub fn serialize_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    rational_value(q).serialize(s)
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl Serialize for RationalCycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for q in &self.0 {
            seq.serialize_element(&rational_value(q))?;
        }
        seq.end()
    }
}

/// Wraps a payload with the schema version and command name.
pub fn envelope(command: &str, payload: &impl Serialize) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    doc.insert("command".into(), Value::from(command));
    match serde_json::to_value(payload).expect("reports serialize") {
        Value::Object(fields) => doc.extend(fields),
        other => {
            doc.insert("result".into(), other);
        }
    }
    Value::Object(doc)
}
