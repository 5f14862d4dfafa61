//! Law-check reports.
//!
//! A [`LawReport`] names the law by its stable string, says whether it holds,
//! and carries a witness as element names. For equational and quasi-equational
//! laws the witness instantiates a failure (re-evaluating the law at it
//! fails); the one existential law, `centered`, attaches the witness to
//! success instead (the fixed point) and has none on failure.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    /// Element names instantiating a failure (or, for `centered`, a success).
    pub witness: Option<Vec<String>>,
    /// Short human-readable elaboration, e.g. the two sides that differ.
    pub detail: Option<String>,
}

impl LawReport {
    pub fn pass(law: impl Into<String>) -> LawReport {
        LawReport { law: law.into(), holds: true, witness: None, detail: None }
    }

    pub fn fail(law: impl Into<String>, witness: Vec<String>, detail: impl Into<String>) -> LawReport {
        LawReport { law: law.into(), holds: false, witness: Some(witness), detail: Some(detail.into()) }
    }

    pub fn pass_with(law: impl Into<String>, witness: Vec<String>, detail: impl Into<String>) -> LawReport {
        LawReport { law: law.into(), holds: true, witness: Some(witness), detail: Some(detail.into()) }
    }

    pub fn fail_plain(law: impl Into<String>, detail: impl Into<String>) -> LawReport {
        LawReport { law: law.into(), holds: false, witness: None, detail: Some(detail.into()) }
    }

    /// One-line rendering: `PASS law` or `FAIL law  witness: (a, b)  note`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(if self.holds { "PASS " } else { "FAIL " });
        s.push_str(&self.law);
        if let Some(w) = &self.witness {
            s.push_str("  witness: (");
            s.push_str(&w.join(", "));
            s.push(')');
        }
        if let Some(d) = &self.detail {
            s.push_str("  ");
            s.push_str(d);
        }
        s
    }
}
