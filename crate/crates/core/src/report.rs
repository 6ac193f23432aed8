//! Outcome of a law check: verdict, coverage counts and witnesses.

use std::fmt;

use serde::Serialize;

use crate::semimodule::Vector;

/// Witnesses kept per report; the failure count is always exact.
pub const MAX_WITNESSES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failed instance of an equation, with both sides rendered.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub law: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip)]
    pub lhs_vector: Option<Vector>,
    #[serde(skip)]
    pub rhs_vector: Option<Vector>,
}

impl Witness {
    /// Whether this witness concerns `law` at exactly the given inputs.
    pub fn is(&self, law: &str, inputs: &[&str]) -> bool {
        self.law == law && self.inputs.iter().map(String::as_str).eq(inputs.iter().copied())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub checked_bound: Option<usize>,
    pub checked: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::Pass,
            checked_bound: None,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
            seed: None,
            notes: Vec::new(),
        }
    }

    pub fn with_bound(mut self, d: usize) -> Self {
        self.checked_bound = Some(d);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn count(&mut self) {
        self.checked += 1;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn push(&mut self, w: Witness) {
        self.verdict = Verdict::Fail;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Records one checked equation `lhs = rhs`; returns whether it held.
    pub fn expect_eq(&mut self, law: &str, inputs: &[String], lhs: &Vector, rhs: &Vector, equal: bool) -> bool {
        self.checked += 1;
        if !equal {
            self.push(Witness {
                law: law.to_string(),
                inputs: inputs.to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                lhs_vector: Some(lhs.clone()),
                rhs_vector: Some(rhs.clone()),
            });
        }
        equal
    }

    /// Records a failure whose sides are not vectors.
    pub fn fail_scalar(&mut self, law: &str, inputs: Vec<String>, lhs: String, rhs: String) {
        self.push(Witness { law: law.to_string(), inputs, lhs, rhs, lhs_vector: None, rhs_vector: None });
    }

    pub fn fail_note(&mut self, law: &str, message: String) {
        self.fail_scalar(law, Vec::new(), message, String::new());
    }

    /// Folds `other` into `self`; the names of failing parts become notes.
    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        if !other.passed() {
            self.verdict = Verdict::Fail;
            self.notes.push(format!("{} failed", other.name));
        }
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        if self.seed.is_none() {
            self.seed = other.seed;
        }
        if self.checked_bound.is_none() {
            self.checked_bound = other.checked_bound;
        }
        self.notes.extend(other.notes);
    }

    pub fn find(&self, law: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.law == law)
    }
}

const DISPLAYED_WITNESSES: usize = 4;

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} instances checked", self.name, self.checked)?;
        if let Some(d) = self.checked_bound {
            write!(f, " at degree <= {d}")?;
        }
        if self.failures > 0 {
            write!(f, ", {} failing", self.failures)?;
        }
        if let Some(seed) = self.seed {
            write!(f, " (seed {seed})")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        // the alternate form `{:#}` prints every witness
        let shown = if f.alternate() { self.witnesses.len() } else { DISPLAYED_WITNESSES };
        for w in self.witnesses.iter().take(shown) {
            write!(f, "\n  witness [{}] at ({})", w.law, w.inputs.join(", "))?;
            write!(f, "\n    lhs = {}\n    rhs = {}", w.lhs, w.rhs)?;
        }
        if self.witnesses.len() > shown {
            write!(f, "\n  ... {} more witnesses", self.witnesses.len() - shown)?;
        }
        Ok(())
    }
}
