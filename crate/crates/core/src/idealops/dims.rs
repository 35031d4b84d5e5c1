use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

/// Finitely supported graded dimensions. Keys are degree tuples of one,
/// two or three integers; missing keys mean 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDims {
    entries: BTreeMap<Vec<i64>, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    /// Single grading: `values[d]` is the dimension in degree `d`.
    pub fn from_values(values: &[u64]) -> Self {
        let mut g = GradedDims::new();
        for (d, &v) in values.iter().enumerate() {
            g.insert(vec![d as i64], v);
        }
        g
    }

    pub fn insert(&mut self, key: Vec<i64>, value: u64) {
        if value == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn get(&self, key: &[i64]) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &u64)> {
        self.entries.iter()
    }

    pub fn first_nonzero(&self) -> Option<(&Vec<i64>, u64)> {
        self.entries.iter().next().map(|(k, v)| (k, *v))
    }

    /// Values in degrees `0..=maxdeg` of a singly graded table.
    pub fn values(&self, maxdeg: i64) -> Vec<u64> {
        (0..=maxdeg).map(|d| self.get(&[d])).collect()
    }

    pub fn to_json(&self) -> Value {
        let list: Vec<Value> = self
            .entries
            .iter()
            .map(|(k, v)| json!({"degree": k, "dim": v}))
            .collect();
        Value::Array(list)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| {
                let key: Vec<String> = k.iter().map(|d| d.to_string()).collect();
                format!("{}:{}", key.join(","), v)
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
