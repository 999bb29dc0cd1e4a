//! Outcomes of relation checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Result of verifying one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    /// Largest input layer on which the relation was compared, if layered.
    pub window: Option<i64>,
    pub passed: bool,
    /// `true` for negative controls: the relation is expected to fail, and
    /// `passed` records whether it did.
    pub control: bool,
    pub detail: String,
    pub elapsed_ms: Option<u64>,
}

impl Outcome {
    pub fn new(name: impl Into<String>, window: Option<i64>, passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            name: name.into(),
            window,
            passed,
            control: false,
            detail: detail.into(),
            elapsed_ms: None,
        }
    }

    /// A negative control: `failed` is whether the mutated relation broke.
    pub fn control(name: impl Into<String>, window: Option<i64>, failed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            control: true,
            ..Outcome::new(name, window, failed, detail)
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<48}", self.name)?;
        match self.window {
            Some(w) => write!(f, " window<={w:<3}")?,
            None => write!(f, " {:<11}", "")?,
        }
        write!(f, " {}", self.status())?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " {ms}ms")?;
        }
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

/// A named group of outcomes together with measured quantities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub outcomes: Vec<Outcome>,
    /// Measured constants and conventions, as `(key, value)` pairs.
    pub facts: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn push(&mut self, o: Outcome) {
        self.outcomes.push(o);
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.facts.push((key.into(), value.into()));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.outcomes.extend(other.outcomes);
        self.facts.extend(other.facts);
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for (k, v) in &self.facts {
            writeln!(f, "  {k}: {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for o in &self.outcomes {
            writeln!(f, "  {o}")?;
        }
        Ok(())
    }
}
