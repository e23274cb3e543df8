use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::PermGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisUnmet,
    ResourceExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisUnmet => "hypothesis-unmet",
            Status::ResourceExceeded => "resource-exceeded",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Divides,
    Equal,
    AtMost,
    AtLeast,
    /// Left subgroup contained in the right one; sides are orders.
    Subgroup,
    /// Equal subgroups; sides are orders.
    SameSubgroup,
}

/// One integer comparison behind a verdict. Integers are decimal strings so
/// that JSON readers never round them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub what: String,
    pub relation: Relation,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub statement: String,
    pub group: String,
    /// Parameters of this instance, such as the normal subgroup used.
    pub params: String,
    pub p: u64,
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_unmet: usize,
    pub resource_exceeded: usize,
}

impl Summary {
    pub fn of(verdicts: &[Verdict]) -> Self {
        let mut s = Summary::default();
        for v in verdicts {
            match v.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::HypothesisUnmet => s.hypothesis_unmet += 1,
                Status::ResourceExceeded => s.resource_exceeded += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.hypothesis_unmet + self.resource_exceeded
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} verdicts: {} pass, {} fail, {} hypothesis-unmet, {} resource-exceeded",
            self.total(),
            self.pass,
            self.fail,
            self.hypothesis_unmet,
            self.resource_exceeded
        )
    }
}

/// Serializes verdicts as a pretty JSON array followed by a newline.
pub fn to_json(verdicts: &[Verdict]) -> String {
    let mut s = serde_json::to_string_pretty(verdicts).expect("verdicts serialize");
    s.push('\n');
    s
}

/// Accumulates checks for one claim instance.
#[derive(Debug, Default)]
pub(crate) struct Recorder {
    pub(crate) checks: Vec<Check>,
    pub(crate) witness: Option<String>,
    pub(crate) note: Option<String>,
}

impl Recorder {
    pub(crate) fn new() -> Self {
        Recorder::default()
    }

    fn push(&mut self, what: String, relation: Relation, lhs: String, rhs: String, holds: bool) -> bool {
        if !holds && self.witness.is_none() {
            self.witness = Some(format!("{what}: {lhs} vs {rhs}"));
        }
        self.checks.push(Check {
            what,
            relation,
            lhs,
            rhs,
            holds,
        });
        holds
    }

    pub(crate) fn divides(&mut self, what: impl Into<String>, a: u128, b: u128) -> bool {
        let holds = a != 0 && b.is_multiple_of(a);
        self.push(what.into(), Relation::Divides, a.to_string(), b.to_string(), holds)
    }

    pub(crate) fn equal(&mut self, what: impl Into<String>, a: u128, b: u128) -> bool {
        self.push(what.into(), Relation::Equal, a.to_string(), b.to_string(), a == b)
    }

    pub(crate) fn at_least(&mut self, what: impl Into<String>, a: i128, b: i128) -> bool {
        self.push(what.into(), Relation::AtLeast, a.to_string(), b.to_string(), a >= b)
    }

    pub(crate) fn at_most(&mut self, what: impl Into<String>, a: i128, b: i128) -> bool {
        self.push(what.into(), Relation::AtMost, a.to_string(), b.to_string(), a <= b)
    }

    pub(crate) fn subgroup(&mut self, what: impl Into<String>, h: &PermGroup, k: &PermGroup) -> bool {
        let holds = h.is_subgroup_of(k);
        self.push(
            what.into(),
            Relation::Subgroup,
            h.order().to_string(),
            k.order().to_string(),
            holds,
        )
    }

    pub(crate) fn same(&mut self, what: impl Into<String>, h: &PermGroup, k: &PermGroup) -> bool {
        let holds = h.same_as(k);
        self.push(
            what.into(),
            Relation::SameSubgroup,
            h.order().to_string(),
            k.order().to_string(),
            holds,
        )
    }

    /// Replaces the witness of the first failure with a more concrete one.
    pub(crate) fn witness(&mut self, w: impl Into<String>) {
        self.witness = Some(w.into());
    }

    pub(crate) fn note(&mut self, n: impl Into<String>) {
        self.note = Some(n.into());
    }

    pub(crate) fn failed(&self) -> bool {
        self.checks.iter().any(|c| !c.holds)
    }
}

/// Result of evaluating one claim instance.
pub(crate) enum Outcome {
    Checked(Recorder),
    Unmet(String),
}

pub(crate) fn status_of_error(e: &Error) -> Status {
    match e {
        Error::ResourceExceeded { .. } => Status::ResourceExceeded,
        Error::HypothesisUnmet(_) => Status::HypothesisUnmet,
        _ => Status::Fail,
    }
}
