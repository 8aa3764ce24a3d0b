//! Runs named checks on a gallery entry or an input file and renders the
//! result as JSON, markdown or DOT.

use std::fmt::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::completions::ShapeBound;
use crate::dlat::{Axiom, FinDLat};
use crate::dot::{lattice_to_dot, space_to_dot, DEFAULT_FAN_PREFIX};
use crate::error::{Error, Result};
use crate::gallery::{Expectation, GalleryEntry, Subject};
use crate::poset::PosetJson;
use crate::report::{CheckReport, Verdict, Witness};
use crate::separations::{reconfirm, Checker, SpaceCheck};
use crate::space::{SpaceJson, SpaceSpec};
use crate::symset::SymSet;

/// Exit code when a verdict differs from the expected one.
pub const EXIT_MISMATCH: i32 = 4;
/// Exit code for unreadable input, bad schemas and unknown names.
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Md,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "md" => Ok(Format::Md),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Precondition(format!("unknown format {s:?}; expected json, md or dot"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub report: CheckReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    /// For false verdicts, whether the witness alone refutes the axiom.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconfirmed: Option<bool>,
}

impl CheckOutcome {
    /// A bounded positive expectation matches a bounded positive verdict at
    /// whatever bound the run used.
    pub fn matches(&self) -> Option<bool> {
        self.expected.map(|e| match (e, self.report.verdict) {
            (Verdict::VerifiedAtBound(_), Verdict::VerifiedAtBound(_)) => true,
            (e, v) => e == v,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    pub subject: String,
    /// Shape bound of the run; 0 for finite lattices, where checks are exact.
    pub bound: usize,
    pub outcomes: Vec<CheckOutcome>,
    #[serde(skip)]
    graph: String,
}

impl RunResult {
    /// 2 if any verdict is unknown, then 4 on an expectation mismatch,
    /// then 1 if any verdict is false, else 0.
    pub fn exit_code(&self) -> i32 {
        let verdicts = || self.outcomes.iter().map(|o| o.report.verdict);
        if verdicts().any(|v| v == Verdict::Unknown) {
            2
        } else if self.outcomes.iter().any(|o| o.matches() == Some(false)) {
            EXIT_MISMATCH
        } else if verdicts().any(|v| v.is_false()) {
            1
        } else {
            0
        }
    }

    pub fn mismatches(&self) -> Vec<&CheckOutcome> {
        self.outcomes.iter().filter(|o| o.matches() == Some(false)).collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Md => self.to_markdown(),
            Format::Dot => self.graph.clone(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut s = match self.bound {
            0 => format!("# {} (exact)\n\n", self.subject),
            k => format!("# {} (bound {k})\n\n", self.subject),
        };
        s.push_str("| check | verdict | expected | witness |\n|---|---|---|---|\n");
        for o in &self.outcomes {
            let expected = match (o.expected, o.matches()) {
                (Some(e), Some(true)) => format!("{e} ✓"),
                (Some(e), _) => format!("{e} ✗"),
                (None, _) => String::new(),
            };
            let witness = o.report.witness.as_ref().map(witness_text).unwrap_or_default();
            let _ = writeln!(s, "| {} | {} | {expected} | {witness} |", o.check, o.report.verdict);
        }
        for o in &self.outcomes {
            let _ = writeln!(s, "\n## {}\n", o.check);
            if let Some(a) = &o.anchor {
                let _ = writeln!(s, "expected from: {a}\n");
            }
            for t in &o.report.trace {
                let _ = writeln!(s, "- {} → {} ({})", t.step, t.result, t.basis);
            }
            if !o.report.witness_map.is_empty() {
                let _ = writeln!(s, "- {} separated pairs recorded", o.report.witness_map.len());
            }
        }
        s
    }
}

fn witness_text(w: &Witness) -> String {
    serde_json::to_string(w).expect("witnesses serialize")
}

fn expand<T: Copy>(checks: &[String], all: &[T], parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for c in checks {
        if c == "all" {
            out.extend_from_slice(all);
        } else {
            out.push(parse(c)?);
        }
    }
    Ok(out)
}

fn outcome(check: String, report: CheckReport, expected: Option<&Expectation>, reconfirmed: Option<bool>) -> CheckOutcome {
    CheckOutcome {
        check,
        report,
        expected: expected.map(|e| e.verdict),
        anchor: expected.map(|e| e.anchor.clone()),
        reconfirmed,
    }
}

pub fn run_space(
    subject: &str,
    space: &SpaceSpec,
    hints: &[SymSet],
    expected: &[Expectation],
    checks: &[String],
    bound: ShapeBound,
) -> Result<RunResult> {
    let checks = expand(checks, &SpaceCheck::ALL, SpaceCheck::from_str)?;
    let checker = Checker::new(space, bound).with_hints(hints.to_vec());
    let mut outcomes = Vec::new();
    for c in checks {
        let report = checker.run(c)?;
        let re = if report.verdict.is_false() {
            Some(reconfirm(space, c, &report)?)
        } else {
            None
        };
        let name = c.name();
        let e = expected.iter().find(|e| e.check == name);
        outcomes.push(outcome(name, report, e, re));
    }
    Ok(RunResult {
        subject: subject.into(),
        bound: bound.k(),
        graph: space_to_dot(space, DEFAULT_FAN_PREFIX, subject),
        outcomes,
    })
}

/// Definition-level checks on a finite lattice, each cross-checked on the
/// dual; a disagreement turns the verdict unknown.
pub fn run_lattice(subject: &str, l: &FinDLat, expected: &[Expectation], checks: &[String]) -> Result<RunResult> {
    let axioms = expand(checks, &Axiom::ALL, Axiom::from_str)?;
    let mut outcomes = Vec::new();
    for ax in axioms {
        let mut report = l.check_axiom_def(ax);
        let dual = l.dual_axiom_check(ax);
        let agree = dual.verdict == report.verdict;
        for t in dual.trace {
            report = report.step(format!("dual: {}", t.step), t.result, t.basis);
        }
        if !agree {
            report.verdict = Verdict::Unknown;
        }
        let name = ax.name().to_string();
        let e = expected.iter().find(|e| e.check == name);
        outcomes.push(outcome(name, report, e, None));
    }
    Ok(RunResult {
        subject: subject.into(),
        bound: 0,
        graph: lattice_to_dot(l, subject),
        outcomes,
    })
}

pub fn run_entry(entry: &GalleryEntry, checks: &[String], bound: ShapeBound) -> Result<RunResult> {
    match &entry.subject {
        Subject::Space(s) => run_space(&entry.id, s, &entry.hints, &entry.expected, checks, bound),
        Subject::Lattice(l) => run_lattice(&entry.id, l, &entry.expected, checks),
    }
}

/// Reads a lattice (`{"elements", "leq"}`) or a space
/// (`{"named", "named_leq", "fans"}`) from JSON.
pub fn parse_subject(text: &str) -> Result<Subject> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("elements").is_some() {
        let json: PosetJson = serde_json::from_value(value)?;
        Ok(Subject::Lattice(FinDLat::from_json(&json)?))
    } else {
        let json: SpaceJson = serde_json::from_value(value)?;
        Ok(Subject::Space(SpaceSpec::from_json(&json)?))
    }
}

pub fn load_subject(path: &Path) -> Result<Subject> {
    parse_subject(&std::fs::read_to_string(path)?)
}

pub fn run_subject(name: &str, subject: &Subject, checks: &[String], bound: ShapeBound) -> Result<RunResult> {
    match subject {
        Subject::Space(s) => run_space(name, s, &[], &[], checks, bound),
        Subject::Lattice(l) => run_lattice(name, l, &[], checks),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::entry;

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn fig1_run_matches_expectations() {
        let r = run_entry(&entry("fig1").unwrap(), &strs(&["subfit_L", "subfit_BL"]), ShapeBound::default()).unwrap();
        assert_eq!(r.outcomes[0].report.verdict, Verdict::False);
        assert_eq!(r.outcomes[0].reconfirmed, Some(true));
        assert_eq!(r.outcomes[1].report.verdict, Verdict::VerifiedAtBound(2));
        assert!(r.mismatches().is_empty());
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn three_chain_file() {
        let text = r#"{"elements":["0","a","1"],"leq":[["0","a"],["a","1"],["0","1"]]}"#;
        let s = parse_subject(text).unwrap();
        let r = run_subject("chain", &s, &strs(&["all"]), ShapeBound::default()).unwrap();
        let v = |c: &str| r.outcomes.iter().find(|o| o.check == c).unwrap().report.verdict;
        assert_eq!(v("vsubfit"), Verdict::False);
        assert_eq!(v("boolean"), Verdict::False);
    }

    #[test]
    fn output_is_stable() {
        let e = entry("fig2").unwrap();
        let a = run_entry(&e, &strs(&["all"]), ShapeBound::default()).unwrap();
        let b = run_entry(&e, &strs(&["all"]), ShapeBound::default()).unwrap();
        for f in [Format::Json, Format::Md, Format::Dot] {
            assert_eq!(a.render(f), b.render(f));
        }
    }

    #[test]
    fn unknown_check_is_an_error() {
        let e = entry("fig1").unwrap();
        assert!(matches!(
            run_entry(&e, &strs(&["nope"]), ShapeBound::default()),
            Err(Error::UnknownCheck(_))
        ));
    }
}
