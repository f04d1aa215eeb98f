//! Command reports and their human and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use contactgeom::contact::{IdentityCheck, StructureReport};
use contactgeom::soliton::TheoremReport;
use contactgeom::tensor::TensorField;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub index: Vec<usize>,
    pub value: String,
}

fn components(t: &TensorField) -> Vec<Component> {
    t.nonzero_components()
        .into_iter()
        .map(|(index, v)| Component {
            index,
            value: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<Component>,
}

impl From<&IdentityCheck> for Check {
    fn from(c: &IdentityCheck) -> Self {
        Check {
            name: c.name.clone(),
            holds: c.holds,
            residual: c.residual.as_ref().map(components).unwrap_or_default(),
        }
    }
}

fn sorted_checks<'a>(checks: impl IntoIterator<Item = &'a IdentityCheck>) -> Vec<Check> {
    let mut out: Vec<Check> = checks.into_iter().map(Check::from).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem {
    pub name: String,
    pub outcome: String,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub structure: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, Vec<Component>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub theorems: Vec<Theorem>,
}

impl Report {
    pub fn new(command: &str, structure: &str) -> Self {
        Report {
            command: command.into(),
            structure: structure.into(),
            passed: true,
            ..Default::default()
        }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.insert(key.into(), value.to_string());
    }

    pub fn tensor(&mut self, key: &str, t: &TensorField) {
        self.tensors.insert(key.into(), components(t));
    }

    pub fn add_checks(&mut self, report: &StructureReport) {
        self.add_check_list(&report.checks);
    }

    pub fn add_check_list(&mut self, checks: &[IdentityCheck]) {
        self.checks.extend(checks.iter().map(Check::from));
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.passed &= checks.iter().all(|c| c.holds);
    }

    pub fn add_theorems(&mut self, reports: &[TheoremReport]) {
        for r in reports {
            self.theorems.push(Theorem {
                name: r.name.clone(),
                outcome: r.outcome.as_str().into(),
                hypotheses: sorted_checks(&r.hypotheses),
                conclusions: sorted_checks(&r.conclusions),
            });
        }
        self.theorems.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.structure);
        for (k, v) in &self.facts {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for (k, comps) in &self.tensors {
            let _ = writeln!(out, "  {k}:");
            if comps.is_empty() {
                let _ = writeln!(out, "    all components zero");
            }
            write_components(&mut out, comps, "    ");
        }
        write_checks(&mut out, &self.checks, "  ");
        for t in &self.theorems {
            let _ = writeln!(out, "  [{}] {}", t.outcome, t.name);
            if !t.hypotheses.is_empty() {
                let _ = writeln!(out, "    hypotheses:");
                write_checks(&mut out, &t.hypotheses, "      ");
            }
            if !t.conclusions.is_empty() {
                let _ = writeln!(out, "    conclusions:");
                write_checks(&mut out, &t.conclusions, "      ");
            }
        }
        if let Some(s) = &self.summary {
            let _ = writeln!(out, "{s}");
        }
        out
    }
}

fn write_components(out: &mut String, comps: &[Component], indent: &str) {
    for c in comps {
        let idx: Vec<String> = c.index.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{indent}[{}] = {}", idx.join(", "), c.value);
    }
}

fn write_checks(out: &mut String, checks: &[Check], indent: &str) {
    for c in checks {
        let _ = writeln!(
            out,
            "{indent}{}  {}",
            if c.holds { "PASS" } else { "FAIL" },
            c.name
        );
        write_components(out, &c.residual, &format!("{indent}      "));
    }
}
