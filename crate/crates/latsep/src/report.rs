//! Verdicts and check reports shared by both engines.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symset::SymSetJson;

/// Outcome of a single separation-axiom check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    /// No counterexample among the symbolic shapes with supports below `k`.
    VerifiedAtBound(usize),
    /// The bounded search neither found a witness nor could refute.
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// `Some(true)` for true and verified-at-bound, `Some(false)` for false.
    pub fn holds(self) -> Option<bool> {
        match self {
            Verdict::True | Verdict::VerifiedAtBound(_) => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    /// 0 true, 1 false, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::True | Verdict::VerifiedAtBound(_) => 0,
            Verdict::False => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True => f.write_str("true"),
            Verdict::False => f.write_str("false"),
            Verdict::VerifiedAtBound(k) => write!(f, "verified-at-bound({k})"),
            Verdict::Unknown => f.write_str("unknown"),
        }
    }
}

impl std::str::FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "true" => Ok(Verdict::True),
            "false" => Ok(Verdict::False),
            "unknown" => Ok(Verdict::Unknown),
            _ => s
                .strip_prefix("verified-at-bound(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(Verdict::VerifiedAtBound)
                .ok_or_else(|| format!("bad verdict `{s}`")),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A single lattice element, e.g. one without a complement.
    Element { a: String },
    /// A pair `a`, `b` for which no separating element exists.
    ElementPair { a: String, b: String },
    /// A point of a space (or a generic fan member such as `x[n]`).
    Point { point: String },
    Set { set: SymSetJson },
    SetPair { u: SymSetJson, v: SymSetJson },
}

/// One evaluated criterion in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: String,
    pub result: String,
    /// The characterization the step relies on.
    pub basis: String,
}

impl TraceStep {
    pub fn new(step: impl Into<String>, result: impl fmt::Display, basis: impl Into<String>) -> TraceStep {
        TraceStep {
            step: step.into(),
            result: result.to_string(),
            basis: basis.into(),
        }
    }
}

/// A `(U, V, W)` triple: `W` separates `U` from `V` in a subfitness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub u: SymSetJson,
    pub v: SymSetJson,
    pub w: SymSetJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub axiom: String,
    pub target: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub trace: Vec<TraceStep>,
    /// Rather-below pairs `[c, a]` (regularity on finite lattices).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relation: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_map: Vec<PairWitness>,
}

impl CheckReport {
    pub fn new(axiom: impl Into<String>, target: impl Into<String>, verdict: Verdict) -> CheckReport {
        CheckReport {
            axiom: axiom.into(),
            target: target.into(),
            verdict,
            witness: None,
            trace: Vec::new(),
            relation: Vec::new(),
            witness_map: Vec::new(),
        }
    }

    pub fn with_witness(mut self, w: Witness) -> CheckReport {
        self.witness = Some(w);
        self
    }

    pub fn step(mut self, step: impl Into<String>, result: impl fmt::Display, basis: impl Into<String>) -> CheckReport {
        self.trace.push(TraceStep::new(step, result, basis));
        self
    }
}
