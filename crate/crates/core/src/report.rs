use std::collections::BTreeMap;
use std::fmt;

/// A single failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short name of the axiom family, e.g. `"associativity"` or `"P4"`.
    pub axiom: String,
    /// The offending tuple, rendered with element names where known.
    pub witness: String,
}

/// Outcome of an exhaustive axiom check.
///
/// Violations are recorded in the order they are found; checkers iterate
/// tuples in index order so reports are deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// At most [`MAX_STORED_VIOLATIONS`] witnesses are kept.
    pub violations: Vec<Violation>,
    /// Violations found beyond the stored ones.
    pub dropped: u64,
    pub checked: u64,
    /// Instances checked per axiom name.
    pub checked_by_axiom: BTreeMap<String, u64>,
}

pub const MAX_STORED_VIOLATIONS: usize = 256;

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.dropped == 0
    }

    pub fn violation_count(&self) -> u64 {
        self.violations.len() as u64 + self.dropped
    }

    fn push(&mut self, v: Violation) {
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(v);
        } else {
            self.dropped += 1;
        }
    }

    /// Records one checked instance and a violation if `ok` is false.
    pub fn check(&mut self, ok: bool, axiom: &str, witness: impl FnOnce() -> String) {
        self.checked += 1;
        match self.checked_by_axiom.get_mut(axiom) {
            Some(n) => *n += 1,
            None => {
                self.checked_by_axiom.insert(axiom.to_string(), 1);
            }
        }
        if !ok {
            self.push(Violation {
                axiom: axiom.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn fail(&mut self, axiom: &str, witness: impl Into<String>) {
        self.checked_by_axiom.entry(axiom.to_string()).or_insert(0);
        self.push(Violation {
            axiom: axiom.to_string(),
            witness: witness.into(),
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checked += other.checked;
        self.dropped += other.dropped;
        for (k, n) in other.checked_by_axiom {
            *self.checked_by_axiom.entry(k).or_insert(0) += n;
        }
        for v in other.violations {
            self.push(v);
        }
    }

    /// Prefixes every axiom name with `scope/`.
    pub fn scoped(mut self, scope: &str) -> Self {
        for v in &mut self.violations {
            v.axiom = format!("{scope}/{}", v.axiom);
        }
        self.checked_by_axiom = std::mem::take(&mut self.checked_by_axiom)
            .into_iter()
            .map(|(k, n)| (format!("{scope}/{k}"), n))
            .collect();
        self
    }

    pub fn violates(&self, axiom: &str) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom == axiom || v.axiom.ends_with(&format!("/{axiom}")))
    }

    /// Distinct axiom names that failed, in first-seen order.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }

    /// `(axiom, checked, violations)` for every axiom seen, sorted by name.
    /// Violations past the stored cap are not attributed.
    pub fn families(&self) -> Vec<(String, u64, u64)> {
        self.checked_by_axiom
            .iter()
            .map(|(k, &n)| {
                let bad = self.violations.iter().filter(|v| &v.axiom == k).count() as u64;
                (k.clone(), n, bad)
            })
            .collect()
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid ({} instances checked)", self.checked);
        }
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.axiom, v.witness)?;
        }
        if self.dropped > 0 {
            writeln!(f, "  ... and {} more", self.dropped)?;
        }
        Ok(())
    }
}
