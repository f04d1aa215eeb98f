use crate::symbolic::RationalFunction;
use crate::tensor::{Chart, TensorField};

/// Verdict for one exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// The nonzero residual (or the offending value) when the check fails.
    pub residual: Option<TensorField>,
}

impl IdentityCheck {
    /// Passes iff `residual` vanishes identically.
    pub fn vanishing(name: impl Into<String>, residual: TensorField) -> Self {
        let holds = residual.is_zero();
        IdentityCheck {
            name: name.into(),
            holds,
            residual: if holds { None } else { Some(residual) },
        }
    }

    pub fn vanishing_scalar(
        name: impl Into<String>,
        chart: &Chart,
        value: RationalFunction,
    ) -> Self {
        Self::vanishing(name, TensorField::scalar(chart, value))
    }

    /// Passes iff `value` is not identically zero.
    pub fn nonvanishing(name: impl Into<String>, chart: &Chart, value: RationalFunction) -> Self {
        let holds = !value.is_zero();
        IdentityCheck {
            name: name.into(),
            holds,
            residual: if holds {
                None
            } else {
                Some(TensorField::scalar(chart, value))
            },
        }
    }

    pub fn flag(name: impl Into<String>, holds: bool) -> Self {
        IdentityCheck {
            name: name.into(),
            holds,
            residual: None,
        }
    }
}

/// A list of identity verdicts, each name appearing once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureReport {
    pub checks: Vec<IdentityCheck>,
}

impl StructureReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: IdentityCheck) {
        debug_assert!(
            self.get(&check.name).is_none(),
            "duplicate check {}",
            check.name
        );
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: StructureReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Checks sorted by name.
    pub fn sorted(&self) -> Vec<&IdentityCheck> {
        let mut v: Vec<_> = self.checks.iter().collect();
        v.sort_by(|a, b| a.name.cmp(&b.name));
        v
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
