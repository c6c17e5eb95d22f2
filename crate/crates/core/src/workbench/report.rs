//! Command reports, rendered as text or JSON.

use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::cert::{AxiomCheck, CertReport, Verdict};
use crate::field::Scalar;
use crate::random::RNG_ALGORITHM;

/// One titled group of verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub checks: CertReport,
}

/// Verdicts, computed dimensions and (optionally) timings for one command.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub sections: Vec<Section>,
    pub dimensions: Vec<(String, usize)>,
    pub notes: Vec<String>,
    pub timing: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            seed,
            ..Default::default()
        }
    }

    pub fn section(&mut self, title: impl Into<String>, checks: CertReport) {
        self.sections.push(Section {
            title: title.into(),
            checks,
        });
    }

    pub fn dimension(&mut self, name: impl Into<String>, dim: usize) {
        self.dimensions.push((name.into(), dim));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn time(&mut self, step: impl Into<String>, d: Duration) {
        self.timing.push((step.into(), d));
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.checks.passed())
    }

    pub fn first_failure(&self) -> Option<(&str, &AxiomCheck)> {
        self.sections
            .iter()
            .find_map(|s| s.checks.first_failure().map(|c| (s.title.as_str(), c)))
    }

    pub fn render_text(&self, timing: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("rng: {RNG_ALGORITHM}; seed {}\n", self.seed));
        for s in &self.sections {
            out.push_str(&format!("== {} ==\n", s.title));
            for c in &s.checks.checks {
                match &c.verdict {
                    Verdict::Pass => out.push_str(&format!("PASS {}\n", c.label())),
                    Verdict::Fail(w) => {
                        out.push_str(&format!("FAIL {} (witness basis index {})\n", c.label(), w.basis_index));
                        out.push_str(&format!("     lhs: {}\n", scalars(&w.lhs)));
                        out.push_str(&format!("     rhs: {}\n", scalars(&w.rhs)));
                    }
                }
            }
        }
        if !self.dimensions.is_empty() {
            out.push_str("== dimensions ==\n");
            for (name, d) in &self.dimensions {
                out.push_str(&format!("{name} = {d}\n"));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        if timing && !self.timing.is_empty() {
            out.push_str("== timing ==\n");
            for (step, d) in &self.timing {
                out.push_str(&format!("{step}: {:.3} ms\n", d.as_secs_f64() * 1e3));
            }
        }
        out.push_str(&format!("verdict: {}\n", if self.passed() { "PASS" } else { "FAIL" }));
        out
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let checks: Vec<Value> = s.checks.checks.iter().map(check_json).collect();
                json!({"title": s.title, "passed": s.checks.passed(), "checks": checks})
            })
            .collect();
        let mut dims = Map::new();
        for (name, d) in &self.dimensions {
            dims.insert(name.clone(), json!(d));
        }
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("rng".into(), json!({"algorithm": RNG_ALGORITHM, "seed": self.seed}));
        m.insert("sections".into(), Value::Array(sections));
        m.insert("dimensions".into(), Value::Object(dims));
        m.insert("notes".into(), json!(self.notes));
        m.insert("verdict".into(), json!(if self.passed() { "PASS" } else { "FAIL" }));
        if timing {
            let mut t = Map::new();
            for (step, d) in &self.timing {
                t.insert(step.clone(), json!(d.as_secs_f64() * 1e3));
            }
            m.insert("timing_ms".into(), Value::Object(t));
        }
        Value::Object(m)
    }

    pub fn render_json(&self, timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json(timing)).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

fn scalars(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn check_json(c: &AxiomCheck) -> Value {
    let mut m = Map::new();
    m.insert("axiom".into(), json!(c.axiom.name()));
    m.insert("scope".into(), json!(c.scope));
    match &c.verdict {
        Verdict::Pass => {
            m.insert("verdict".into(), json!("PASS"));
        }
        Verdict::Fail(w) => {
            m.insert("verdict".into(), json!("FAIL"));
            let strs = |v: &[Scalar]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
            m.insert(
                "witness".into(),
                json!({"basis_index": w.basis_index, "lhs": strs(&w.lhs), "rhs": strs(&w.rhs)}),
            );
        }
    }
    Value::Object(m)
}
