use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    HoldsUpToBound,
    Fails,
    HypothesisViolated,
}

impl Status {
    pub fn holds(self) -> bool {
        self == Status::HoldsUpToBound
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::HoldsUpToBound => "HOLDS_UP_TO_BOUND",
            Status::Fails => "FAILS",
            Status::HypothesisViolated => "HYPOTHESIS_VIOLATED",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmax: Option<i64>,
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(v) = self.pmax {
            parts.push(format!("pmax={v}"));
        }
        if let Some(v) = self.qmax {
            parts.push(format!("qmax={v}"));
        }
        if let Some(v) = self.nmax {
            parts.push(format!("nmax={v}"));
        }
        if let Some(v) = self.dmax {
            parts.push(format!("dmax={v}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    pub description: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut at = Vec::new();
        if let (Some(p), Some(q)) = (self.p, self.q) {
            at.push(format!("(p,q)=({p},{q})"));
        } else if let Some(p) = self.p {
            at.push(format!("p={p}"));
        }
        if let Some(n) = self.n {
            at.push(format!("n={n}"));
        }
        if let Some(d) = self.degree {
            at.push(format!("degree {d}"));
        }
        if at.is_empty() {
            f.write_str(&self.description)
        } else {
            write!(f, "{}: {}", at.join(", "), self.description)
        }
    }
}

/// One row of an evidence table: a cell index such as `[p, q]` or `[n]`
/// and one dimension vector (degrees `0..=dmax`) per column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceRow {
    pub cell: Vec<u32>,
    pub data: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<EvidenceRow>,
}

impl EvidenceTable {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        EvidenceTable {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, cell: Vec<u32>, data: Vec<Vec<u64>>) {
        self.rows.push(EvidenceRow { cell, data });
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckVerdict {
    pub status: Status,
    pub bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub evidence: Vec<EvidenceTable>,
    /// Extra scalar results (relation types, which hypothesis failed, ...).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl CheckVerdict {
    pub(crate) fn from_witness(bounds: Bounds, witness: Option<Witness>, evidence: Vec<EvidenceTable>) -> Self {
        let status = if witness.is_some() { Status::Fails } else { Status::HoldsUpToBound };
        CheckVerdict { status, bounds, witness, evidence, details: BTreeMap::new() }
    }

    pub fn holds(&self) -> bool {
        self.status.holds()
    }

    pub(crate) fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

impl fmt::Display for CheckVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if self.status.holds() {
            write!(f, " ({})", self.bounds)?;
        }
        if let Some(w) = &self.witness {
            write!(f, "; witness {w}")?;
        }
        for (k, v) in &self.details {
            write!(f, "; {k}={v}")?;
        }
        Ok(())
    }
}
