//! Self-describing record of one experiment run. Reports round-trip through
//! JSON losslessly; wall time lives outside `results` so payloads from equal
//! command + seed + version are byte-identical.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub schema_version: u32,
    pub artifact_version: String,
    /// The subcommand path, e.g. "gen c1".
    pub command: String,
    /// Echo of the effective parameters.
    pub params: Value,
    pub seed: u64,
    pub threads: usize,
    /// Operation-specific payload.
    pub results: Value,
    /// None when the operation has no optimality notion.
    pub optimal: Option<bool>,
    #[serde(default)]
    pub wall_ms: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, params: Value, seed: u64) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            params,
            seed,
            threads: 1,
            results: Value::Null,
            optimal: None,
            wall_ms: 0.0,
        }
    }

    /// Payload with volatile fields (timings) removed, for reproducibility
    /// comparisons.
    pub fn stable_view(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("wall_ms");
        }
        strip_wall(&mut v);
        v
    }
}

fn strip_wall(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("wall_ms");
            for (_, val) in map.iter_mut() {
                strip_wall(val);
            }
        }
        Value::Array(items) => {
            for val in items {
                strip_wall(val);
            }
        }
        _ => {}
    }
}
