use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial ring `ℚ[x₁..xₙ]`, or the Laurent ring `ℚ[x₁^±..xₙ^±]`.
///
/// The ring with no variables is the ground field itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub vars: Vec<String>,
    #[serde(default)]
    pub laurent: bool,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], laurent: bool) -> Result<RingRef> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Malformed(format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Malformed(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(Ring { vars, laurent }))
    }

    /// Polynomial ring on the given names. Panics on invalid names.
    pub fn polynomial(vars: &[&str]) -> RingRef {
        Ring::new(vars, false).expect("valid variable names")
    }

    /// Laurent polynomial ring on the given names. Panics on invalid names.
    pub fn laurent(vars: &[&str]) -> RingRef {
        Ring::new(vars, true).expect("valid variable names")
    }

    /// The ground field ℚ viewed as a ring without variables.
    pub fn field() -> RingRef {
        Arc::new(Ring { vars: Vec::new(), laurent: false })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_field(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn validate(self) -> Result<RingRef> {
        Ring::new(&self.vars, self.laurent)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same_ring(a: &RingRef, b: &RingRef) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{:?} vs {:?}", a.vars, b.vars)))
    }
}
