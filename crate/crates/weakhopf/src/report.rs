//! Run reports: the suites a command ran, the objects it emitted, and
//! their text and structured (JSON) renderings.

use serde::Serialize;
use weakhopf_core::linalg::format_rational;
use weakhopf_core::{Rational, VerificationReport};

/// A suite run against one named subject.
#[derive(Clone, Debug)]
pub struct Section {
    pub subject: String,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub objects: Vec<String>,
    pub sections: Vec<Section>,
    pub emitted: Vec<(String, String)>,
    pub presentations_equal: Option<bool>,
    fail_fast: bool,
    stopped: bool,
}

#[derive(Serialize)]
struct WitnessOut {
    indices: Vec<usize>,
    left: Vec<String>,
    right: Vec<String>,
}

#[derive(Serialize)]
struct CheckOut<'a> {
    subject: &'a str,
    suite: &'a str,
    name: &'a str,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct ObservationOut<'a> {
    subject: &'a str,
    suite: &'a str,
    name: &'a str,
    value: Vec<String>,
}

#[derive(Serialize)]
struct EmittedOut<'a> {
    label: &'a str,
    text: &'a str,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    command: &'a str,
    objects: &'a [String],
    passed: bool,
    checks: Vec<CheckOut<'a>>,
    observations: Vec<ObservationOut<'a>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    presentations: Vec<EmittedOut<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    presentations_equal: Option<bool>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl RunReport {
    pub fn new(command: impl Into<String>, fail_fast: bool) -> Self {
        Self { command: command.into(), fail_fast, ..Self::default() }
    }

    /// Runs `suite` unless an earlier failure stopped a fail-fast run.
    pub fn run(&mut self, subject: &str, suite: impl FnOnce() -> VerificationReport) -> bool {
        if self.stopped {
            return false;
        }
        let report = suite();
        let passed = report.passes();
        self.sections.push(Section { subject: subject.to_string(), report });
        if !passed && self.fail_fast {
            self.stopped = true;
        }
        passed
    }

    pub fn stopped(&self) -> bool {
        self.stopped
    }

    pub fn emit(&mut self, label: impl Into<String>, text: impl Into<String>) {
        self.emitted.push((label.into(), text.into()));
    }

    /// Whether every check passed. Presentation equality is informational.
    pub fn passes(&self) -> bool {
        self.sections.iter().all(|s| s.report.passes())
    }

    pub fn counts(&self) -> (usize, usize) {
        let all = self.sections.iter().flat_map(|s| &s.report.checks);
        let (pass, fail): (Vec<_>, Vec<_>) = all.partition(|c| c.passed);
        (pass.len(), fail.len())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("weakhopf {}: {}\n", self.command, self.objects.join(", ")));
        for s in &self.sections {
            out.push_str(&format!("[{}] {}\n", s.subject, s.report.suite));
            for c in &s.report.checks {
                match (&c.witness, c.passed) {
                    (_, true) => out.push_str(&format!("  PASS {}\n", c.name)),
                    (Some(w), false) => out.push_str(&format!(
                        "  FAIL {} at {:?}: left [{}] right [{}]\n",
                        c.name,
                        w.indices,
                        strings(&w.left).join(", "),
                        strings(&w.right).join(", ")
                    )),
                    (None, false) => out.push_str(&format!("  FAIL {}\n", c.name)),
                }
            }
            for o in &s.report.observations {
                out.push_str(&format!("  NOTE {} = [{}]\n", o.name, strings(&o.value).join(", ")));
            }
        }
        for (label, text) in &self.emitted {
            out.push_str(&format!("== {label}\n{text}"));
        }
        let (pass, fail) = self.counts();
        out.push_str(&format!("result: {pass} passed, {fail} failed\n"));
        if let Some(eq) = self.presentations_equal {
            out.push_str(if eq { "presentations equal\n" } else { "presentations differ\n" });
        }
        out
    }

    pub fn render_structured(&self) -> String {
        let mut checks = Vec::new();
        let mut observations = Vec::new();
        for s in &self.sections {
            for c in &s.report.checks {
                checks.push(CheckOut {
                    subject: &s.subject,
                    suite: &s.report.suite,
                    name: &c.name,
                    passed: c.passed,
                    witness: c.witness.as_ref().map(|w| WitnessOut {
                        indices: w.indices.clone(),
                        left: strings(&w.left),
                        right: strings(&w.right),
                    }),
                });
            }
            for o in &s.report.observations {
                observations.push(ObservationOut {
                    subject: &s.subject,
                    suite: &s.report.suite,
                    name: &o.name,
                    value: strings(&o.value),
                });
            }
        }
        let out = ReportOut {
            command: &self.command,
            objects: &self.objects,
            passed: self.passes(),
            checks,
            observations,
            presentations: self.emitted.iter().map(|(label, text)| EmittedOut { label, text }).collect(),
            presentations_equal: self.presentations_equal,
        };
        let mut text = serde_json::to_string_pretty(&out).expect("report serializes");
        text.push('\n');
        text
    }
}
