//! Named law checks with located counterexamples.

use serde::{Deserialize, Serialize};

use crate::cosmos::Mor;
use crate::error::{KernelError, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn equal<F: Field>(&mut self, law: impl Into<String>, lhs: &Mor<F>, rhs: &Mor<F>) -> bool {
        let law = law.into();
        let witness = if lhs.src() != rhs.src() || lhs.dst() != rhs.dst() {
            Some(Witness {
                row: None,
                col: None,
                detail: format!(
                    "shape {}x{} vs {}x{}",
                    lhs.dst().dim,
                    lhs.src().dim,
                    rhs.dst().dim,
                    rhs.src().dim
                ),
            })
        } else {
            lhs.first_difference(rhs).map(|(r, c)| Witness {
                row: Some(r),
                col: Some(c),
                detail: format!("lhs {} rhs {}", lhs.get(r, c).render(), rhs.get(r, c).render()),
            })
        };
        let passed = witness.is_none();
        self.checks.push(LawCheck {
            law,
            passed,
            witness,
        });
        passed
    }

    pub fn truth(&mut self, law: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(LawCheck {
            law: law.into(),
            passed: ok,
            witness: (!ok).then(|| Witness {
                row: None,
                col: None,
                detail: detail.into(),
            }),
        });
        ok
    }

    /// Records a fallible computation; an error becomes a failed check.
    pub fn result<T>(&mut self, law: impl Into<String>, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                self.truth(law, true, "");
                Some(v)
            }
            Err(e) => {
                let (row, col) = match &e {
                    KernelError::NotFactorizable { row, col, .. }
                    | KernelError::LawViolation { row, col, .. } => (Some(*row), Some(*col)),
                    _ => (None, None),
                };
                self.checks.push(LawCheck {
                    law: law.into(),
                    passed: false,
                    witness: Some(Witness {
                        row,
                        col,
                        detail: e.to_string(),
                    }),
                });
                None
            }
        }
    }

    pub fn extend(&mut self, other: LawReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Converts the first failure into an error.
    pub fn into_result(self, context: &str) -> Result<()> {
        match self.checks.into_iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err(KernelError::Invalid(format!(
                "{context}: {} fails{}",
                c.law,
                c.witness.map(|w| format!(" ({})", w.detail)).unwrap_or_default()
            ))),
        }
    }
}
