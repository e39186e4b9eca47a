//! The machine-readable output record every subcommand prints.
//!
//! Keys inside `inputs` and `results` are sorted (BTreeMap) and the top-level
//! fields are declared in alphabetical order, so parsing the emitted JSON and
//! re-serializing it reproduces the bytes exactly. Integer results are always
//! exact decimal strings, never floats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub elapsed_ms: u64,
    pub inputs: BTreeMap<String, String>,
    pub results: BTreeMap<String, String>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            elapsed_ms: 0,
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.results.insert(key.into(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut rec = OutputRecord::new("census");
        rec.input("p", 2).input("q", 3);
        rec.result("total", 32767u64).result("separable_exact", 5119u64);
        rec.elapsed_ms = 12;
        let emitted = rec.to_json();
        let parsed: serde_json::Value = serde_json::from_str(&emitted).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), emitted);
    }
}
