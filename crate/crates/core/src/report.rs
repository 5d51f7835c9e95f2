//! Serializable construction reports. Field elements appear as log
//! exponents with -1 for zero, next to a field descriptor.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::gf::{Elem, Field};
use crate::quantum::QuantumParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Partial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Partial => "PARTIAL",
        })
    }
}

/// Outcome of a single verified property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Holds by construction (e.g. a GRS row space is MDS); not enumerated.
    Structural,
    /// Not checked, usually because the enumeration budget was exceeded.
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    /// Modulus coefficients over GF(p), constant term first.
    pub modulus: Vec<u32>,
}

impl FieldDescriptor {
    pub fn of(field: &Field) -> Self {
        FieldDescriptor { p: field.characteristic(), m: field.degree(), modulus: field.modulus().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub family: String,
    pub params: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    /// Exact minimum distance, when enumerated.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    /// A proven lower bound on the minimum distance.
    pub d_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullSummary {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub claimed_dim: Option<usize>,
    pub gram_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intersection_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    /// MDS verdict on the hull itself; absent when only a subcode is claimed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mds: Option<Status>,
}

/// Evaluation and scaling vectors of a GRS or AG construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vectors {
    pub b: Vec<i64>,
    pub a: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub construction: Construction,
    pub field: FieldDescriptor,
    pub code: CodeSummary,
    pub hull: HullSummary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vectors: Option<Vectors>,
    pub quantum: Vec<QuantumParams>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
}

impl ConstructionReport {
    /// Recomputes `verdict` and `first_failure` from the checks.
    pub fn finalize(&mut self) {
        self.first_failure = self.checks.iter().find(|c| c.status == Status::Fail).map(|c| c.name.clone());
        self.verdict = if self.first_failure.is_some() {
            Verdict::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Skipped) {
            Verdict::Partial
        } else {
            Verdict::Pass
        };
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates checks while a construction is being verified.
#[derive(Default, Debug)]
pub struct Checks(Vec<Check>);

impl Checks {
    pub fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), status, detail: detail.into() });
    }

    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, measured: T, expected: T) {
        let status = Status::from_bool(measured == expected);
        self.push(name, status, format!("measured {measured:?}, expected {expected:?}"));
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.0
    }
}

pub fn log_vector(field: &Field, v: &[Elem]) -> Vec<i64> {
    v.iter().map(|&x| field.to_log_form(x)).collect()
}

/// Serialized form of a code: `{field, n, k, generator, d?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
}

impl CodeJson {
    pub fn of(code: &LinearCode) -> Self {
        let f = code.field();
        CodeJson {
            field: FieldDescriptor::of(f),
            n: code.n(),
            k: code.k(),
            generator: code.generator().row_vecs().iter().map(|r| log_vector(f, r)).collect(),
            d: code.cached_distance(),
        }
    }
}
