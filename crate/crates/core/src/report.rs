//! Verification reports: one flag per axiom, plus a concrete witness for failures.

use std::fmt;

use serde_json::{json, Value};

use crate::scalar::{Field, Scalar};
use crate::tensor::{multi_indices, TensorVec};

/// A failing basis input and the nonzero residual `lhs − rhs` it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis multi-index of the input (one entry per tensor factor).
    pub index: Vec<usize>,
    /// Nonzero entries of `lhs − rhs`, keyed by codomain multi-index.
    pub residual: Vec<(Vec<usize>, Scalar)>,
}

impl Witness {
    pub fn at(index: Vec<usize>) -> Self {
        Witness {
            index,
            residual: Vec::new(),
        }
    }

    fn from_residual(index: Vec<usize>, residual: &TensorVec) -> Self {
        Witness {
            index,
            residual: residual
                .terms()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "residual": self
                .residual
                .iter()
                .map(|(k, v)| json!([k, v.to_canonical()]))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}", self.index)?;
        if !self.residual.is_empty() {
            write!(f, ", residual")?;
            for (k, v) in &self.residual {
                write!(f, " {v}*e{k:?}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomCheck {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        AxiomCheck {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Pass/fail per axiom, in a fixed order, with the first witness of each failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: &AxiomReport) {
        for c in &other.checks {
            let mut c = c.clone();
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.passed)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("report: {}\n", self.subject);
        for c in &self.checks {
            if c.passed {
                s.push_str(&format!("  PASS {}\n", c.name));
            } else {
                s.push_str(&format!("  FAIL {}", c.name));
                if let Some(w) = &c.witness {
                    s.push_str(&format!(" {w}"));
                }
                s.push('\n');
            }
        }
        s.push_str(if self.all_passed() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "passed": self.all_passed(),
            "checks": self
                .checks
                .iter()
                .map(|c| json!({
                    "name": c.name,
                    "passed": c.passed,
                    "witness": c.witness.as_ref().map(Witness::to_json),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(f, "{}: all {} checks pass", self.subject, self.checks.len()),
            Some(c) => {
                write!(f, "{}: `{}` fails", self.subject, c.name)?;
                if let Some(w) = &c.witness {
                    write!(f, " {w}")?;
                }
                Ok(())
            }
        }
    }
}

/// Checks `lhs = rhs` on every basis tensor of `domain` (left-major order), which is
/// the matrix identity column by column. Stops at the first failing column.
pub(crate) fn check_identity(
    name: &str,
    field: Field,
    domain: &[usize],
    lhs: impl Fn(&TensorVec) -> TensorVec,
    rhs: impl Fn(&TensorVec) -> TensorVec,
) -> AxiomCheck {
    for idx in multi_indices(domain) {
        let t = TensorVec::basis(field, domain.to_vec(), &idx);
        let l = lhs(&t);
        let r = rhs(&t);
        debug_assert_eq!(l.dims(), r.dims(), "{name}: sides land in different spaces");
        let diff = l.sub(&r);
        if !diff.is_zero() {
            return AxiomCheck::fail(name, Witness::from_residual(idx, &diff));
        }
    }
    AxiomCheck::pass(name)
}
