//! Structured pass/fail verdicts with concrete witnesses.

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A witness for a failed check: either a tuple of basis indices or one or
/// more explicit coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Indices(Vec<usize>),
    Vectors(Vec<Vec<String>>),
}

impl Witness {
    pub fn vectors(vs: &[&[Scalar]]) -> Witness {
        Witness::Vectors(
            vs.iter()
                .map(|v| v.iter().map(|s| s.render()).collect())
                .collect(),
        )
    }
}

/// Verdict of one property or axiom check. A `Fail` always carries a
/// witness that re-evaluates to a nonzero discrepancy.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(property: &str, detail: impl Into<String>) -> CheckReport {
        CheckReport {
            property: property.to_string(),
            verdict: Verdict::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(property: &str, witness: Witness, detail: impl Into<String>) -> CheckReport {
        CheckReport {
            property: property.to_string(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
