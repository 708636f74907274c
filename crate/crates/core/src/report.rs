//! Verification reports: itemized PASS/FAIL with the first failing tuple.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeffring::{DerivationPair, Element, LinearMap, Poly, VectorField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Anything a check can compare against zero.
pub trait Residual {
    fn is_zero_residual(&self) -> bool;
    fn describe(&self) -> String;
}

impl Residual for Element {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Residual for Poly {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Residual for VectorField {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Residual for LinearMap {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        format!("{:?}", self.to_strings())
    }
}

impl Residual for DerivationPair {
    fn is_zero_residual(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        format!("linear {:?}, symbol {}", self.linear.to_strings(), self.symbol)
    }
}

impl Residual for bool {
    fn is_zero_residual(&self) -> bool {
        *self
    }
    fn describe(&self) -> String {
        "violated".into()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default)]
    overall: Option<Status>,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn overall(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.items.push(CheckItem { id: id.into(), status: Status::Pass, witness: None, note: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, tuple: Vec<usize>, value: impl Into<String>) {
        self.items.push(CheckItem {
            id: id.into(),
            status: Status::Fail,
            witness: Some(Witness { tuple, value: value.into() }),
            note: None,
        });
    }

    pub fn note_last(&mut self, note: impl Into<String>) {
        if let Some(last) = self.items.last_mut() {
            last.note = Some(note.into());
        }
    }

    /// Records one item: PASS if every residual is zero, else FAIL at the first nonzero one.
    pub fn check<R: Residual>(
        &mut self,
        id: impl Into<String>,
        cases: impl IntoIterator<Item = (Vec<usize>, R)>,
    ) -> bool {
        let id = id.into();
        for (tuple, r) in cases {
            if !r.is_zero_residual() {
                self.fail(id, tuple, r.describe());
                return false;
            }
        }
        self.pass(id);
        true
    }

    /// Appends the items of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut item in other.items {
            item.id = format!("{prefix}{}", item.id);
            self.items.push(item);
        }
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.status == Status::Fail)
    }

    /// The report with `overall` filled in, ready for serialization.
    pub fn finalized(mut self) -> Self {
        self.overall = Some(self.overall());
        self
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.overall())?;
        for item in &self.items {
            write!(f, "  [{}] {}", item.status, item.id)?;
            if let Some(w) = &item.witness {
                write!(f, " at {:?}: {}", w.tuple, w.value)?;
            }
            if let Some(n) = &item.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_tracks_items() {
        let mut r = Report::new();
        r.pass("a");
        assert!(r.passed());
        r.check("b", vec![(vec![0], true), (vec![1], false)]);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().witness.as_ref().unwrap().tuple, vec![1]);
        let json = serde_json::to_string(&r.clone().finalized()).unwrap();
        assert!(json.contains("\"overall\":\"FAIL\""));
    }
}
