//! Verification reports and the shared JSON report schema.

use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::element::Element;

/// A violating (or, for existence checks, exhibiting) tuple of basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Element>,
}

impl Witness {
    pub fn new(alg: &AlgebraTable, indices: &[usize]) -> Witness {
        Witness {
            tuple: indices
                .iter()
                .map(|&i| alg.generator(i).name.clone())
                .collect(),
            detail: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn named(tuple: Vec<String>) -> Witness {
        Witness {
            tuple,
            detail: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn sides(mut self, lhs: Element, rhs: Element) -> Witness {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn value(mut self, value: Element) -> Witness {
        self.lhs = Some(value);
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Witness {
        self.detail = Some(detail.into());
        self
    }
}

/// Outcome of one axiom over every tuple it quantifies over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomCheck {
    /// Passes iff there are no violations.
    pub fn from_violations(axiom: impl Into<String>, witnesses: Vec<Witness>) -> AxiomCheck {
        AxiomCheck {
            axiom: axiom.into(),
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub checks: Vec<AxiomCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
}

impl AxiomReport {
    pub fn new(alg: &AlgebraTable, checks: Vec<AxiomCheck>) -> AxiomReport {
        AxiomReport {
            algebra: alg.name().to_string(),
            checks,
            summary: None,
        }
    }

    pub fn with_summary(mut self, summary: impl Into<String>) -> AxiomReport {
        self.summary = Some(summary.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    /// Witnesses of every failed check, in check order.
    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.checks.iter().flat_map(|c| c.witnesses.iter())
    }
}

/// Status of a check in a suite report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "expected-fail")]
    ExpectedFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected-fail",
        }
    }
}

/// What a check is expected to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Pass,
    Fail,
    /// Reported faithfully but never counted as a verification failure.
    Observe,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witnesses: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Element>,
    #[serde(skip)]
    pub expect: Expect,
}

impl Check {
    pub fn new(id: impl Into<String>, holds: bool, expect: Expect) -> Check {
        let status = match (holds, expect) {
            (true, Expect::Fail) => Status::Fail,
            (true, _) => Status::Pass,
            (false, Expect::Fail) => Status::ExpectedFail,
            (false, _) => Status::Fail,
        };
        Check {
            id: id.into(),
            status,
            witnesses: Vec::new(),
            value: None,
            expect,
        }
    }

    pub fn with_value(mut self, value: Element) -> Check {
        self.value = Some(value);
        self
    }

    pub fn with_witness(mut self, w: impl Serialize) -> Check {
        self.witnesses
            .push(serde_json::to_value(w).expect("witness serialises"));
        self
    }

    pub fn with_witnesses<W: Serialize>(mut self, ws: impl IntoIterator<Item = W>) -> Check {
        for w in ws {
            self = self.with_witness(w);
        }
        self
    }

    /// True when the outcome matches the expectation.
    pub fn ok(&self) -> bool {
        match self.expect {
            Expect::Observe => true,
            _ => self.status != Status::Fail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub algebra: String,
    pub version: String,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Pretty JSON with every object's keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialises");
        let mut s = serde_json::to_string_pretty(&value).expect("report serialises");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_from_expectation() {
        assert_eq!(Check::new("x", true, Expect::Pass).status, Status::Pass);
        assert_eq!(Check::new("x", false, Expect::Pass).status, Status::Fail);
        assert_eq!(
            Check::new("x", false, Expect::Fail).status,
            Status::ExpectedFail
        );
        assert_eq!(Check::new("x", true, Expect::Fail).status, Status::Fail);
        assert!(Check::new("x", false, Expect::Observe).ok());
        assert!(!Check::new("x", false, Expect::Pass).ok());
    }

    #[test]
    fn json_keys_sorted() {
        let r = SuiteReport {
            suite: "s".into(),
            checks: vec![
                Check::new("id", true, Expect::Pass).with_witness(Witness::named(vec!["a".into()]))
            ],
            algebra: "A".into(),
            version: "0".into(),
        };
        let json = r.to_json();
        let alg = json.find("\"algebra\"").unwrap();
        let checks = json.find("\"checks\"").unwrap();
        let suite = json.find("\"suite\"").unwrap();
        assert!(alg < checks && checks < suite);
        assert!(json.contains("\"status\": \"pass\""));
        assert!(!json.contains("expect\""));
    }
}
