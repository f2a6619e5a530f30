use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    NotInjective,
    NotSurjective,
    /// A map that should land in a subset or be defined everywhere does not.
    NotWellDefined,
    /// An equational law fails.
    Axiom,
}

/// Evidence that a property fails: which check, what went wrong, and the
/// cells involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub kind: WitnessKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<usize>,
    pub cells: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new(check: impl Into<String>, kind: WitnessKind, detail: impl Into<String>) -> Self {
        Witness {
            check: check.into(),
            kind,
            level: None,
            cells: Vec::new(),
            detail: detail.into(),
        }
    }

    pub fn at_level(mut self, level: usize) -> Self {
        self.level = Some(level);
        self
    }

    pub fn with_cells<I, S>(mut self, cells: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.cells = cells.into_iter().map(Into::into).collect();
        self
    }

    /// Prefixes the check name, used when a check is run on a derived object.
    pub fn within(mut self, outer: &str) -> Self {
        self.check = format!("{outer}/{}", self.check);
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            WitnessKind::NotInjective => "not injective",
            WitnessKind::NotSurjective => "not surjective",
            WitnessKind::NotWellDefined => "not well defined",
            WitnessKind::Axiom => "law fails",
        };
        write!(f, "{}: {kind}", self.check)?;
        if let Some(l) = self.level {
            write!(f, " at level {l}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        if !self.cells.is_empty() {
            write!(f, " [{}]", self.cells.join("; "))?;
        }
        Ok(())
    }
}

/// Outcome of a property check.
pub type Verdict = Result<(), Witness>;

/// One named result in a [`Report`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

/// Named verdicts and counts, in the order they were recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: u32,
    pub verdicts: Vec<Outcome>,
    pub counts: BTreeMap<String, usize>,
}

impl Default for Report {
    fn default() -> Self {
        Report { format_version: 1, verdicts: Vec::new(), counts: BTreeMap::new() }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn verdict(&mut self, name: impl Into<String>, v: &Verdict) -> &mut Self {
        self.verdicts.push(Outcome {
            name: name.into(),
            pass: v.is_ok(),
            witness: v.clone().err(),
            detail: String::new(),
        });
        self
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> &mut Self {
        self.verdicts.push(Outcome { name: name.into(), pass, witness: None, detail: detail.into() });
        self
    }

    /// Records a list of problems; passes iff it is empty.
    pub fn problems(&mut self, name: impl Into<String>, problems: &[String]) -> &mut Self {
        let shown: Vec<&str> = problems.iter().take(5).map(String::as_str).collect();
        let mut detail = shown.join("; ");
        if problems.len() > shown.len() {
            detail.push_str(&format!("; and {} more", problems.len() - shown.len()));
        }
        self.check(name, problems.is_empty(), detail)
    }

    pub fn count(&mut self, name: impl Into<String>, value: usize) -> &mut Self {
        self.counts.insert(name.into(), value);
        self
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.verdicts.extend(other.verdicts);
        self.counts.extend(other.counts);
        self
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|o| o.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.verdicts.iter().filter(|o| !o.pass)
    }

    /// Plain text, one line per verdict and count.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for o in &self.verdicts {
            s.push_str(if o.pass { "PASS " } else { "FAIL " });
            s.push_str(&o.name);
            if let Some(w) = &o.witness {
                s.push_str(&format!(": {w}"));
            } else if !o.detail.is_empty() {
                s.push_str(&format!(": {}", o.detail));
            }
            s.push('\n');
        }
        for (k, v) in &self.counts {
            s.push_str(&format!("{k} = {v}\n"));
        }
        s
    }
}
