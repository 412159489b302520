//! Per-condition verdicts with exact witnesses.

use serde::Serialize;

use crate::scalar::Scalar;

/// Exact data exhibiting a failed condition: the basis indices involved
/// (0-based) and the offending values, usually a residual vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub values: Vec<Scalar>,
    pub note: String,
}

impl Witness {
    pub fn new(indices: Vec<usize>, values: Vec<Scalar>) -> Self {
        Self { indices, values, note: String::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Ordered list of checked conditions. The overall verdict is the
/// conjunction of the items; a failed item always carries a witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Witness) {
        self.items.push(CheckItem { name: name.into(), passed: false, witness: Some(witness) });
    }

    /// Records `name` as passing when `witness` is `None`.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    /// Verdict of the named item; panics if absent.
    pub fn verdict(&self, name: &str) -> bool {
        self.item(name).unwrap_or_else(|| panic!("no report item named {name:?}")).passed
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    /// Appends the items of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: &CheckReport) {
        for item in &other.items {
            self.items.push(CheckItem { name: format!("{prefix}{}", item.name), ..item.clone() });
        }
    }

    pub fn to_doc(&self, labels: &[String]) -> ReportDoc {
        ReportDoc {
            verdict: verdict_str(self.passed()).to_string(),
            items: self
                .items
                .iter()
                .map(|i| ItemDoc {
                    name: i.name.clone(),
                    verdict: verdict_str(i.passed).to_string(),
                    witness: i.witness.as_ref().map(|w| WitnessDoc {
                        basis: w
                            .indices
                            .iter()
                            .map(|&k| labels.get(k).cloned().unwrap_or_else(|| format!("#{}", k + 1)))
                            .collect(),
                        values: w.values.iter().map(|v| v.to_string()).collect(),
                        note: w.note.clone(),
                    }),
                })
                .collect(),
        }
    }
}

pub fn verdict_str(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

/// Serializable rendering of a [`CheckReport`] against a basis labelling.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub verdict: String,
    pub items: Vec<ItemDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ItemDoc {
    pub name: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessDoc {
    pub basis: Vec<String>,
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn overall_is_conjunction() {
        let mut r = CheckReport::new();
        assert!(r.passed());
        r.pass("a");
        assert!(r.passed());
        r.fail("b", Witness::new(vec![0, 2], vec![int(-1)]));
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "b");
        let doc = r.to_doc(&["x".into(), "y".into(), "z".into()]);
        assert_eq!(doc.verdict, "fail");
        assert_eq!(doc.items[1].witness.as_ref().unwrap().basis, vec!["x", "z"]);
    }
}
