//! Named pass/fail checks with counterexample witnesses.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::Rational;

/// The first failing instance of a check: the basis indices it was
/// evaluated on and both sides of the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub left: Vec<Rational>,
    pub right: Vec<Rational>,
}

impl Witness {
    pub fn new(indices: &[usize], left: Vec<Rational>, right: Vec<Rational>) -> Self {
        Self { indices: indices.to_vec(), left, right }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// A value the verifier computes and records without asserting anything
/// about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observation {
    pub name: String,
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
}

/// Compares two coefficient vectors, producing a witness on mismatch.
pub fn expect_eq(indices: &[usize], left: Vec<Rational>, right: Vec<Rational>) -> Result<(), Witness> {
    if left == right {
        Ok(())
    } else {
        Err(Witness::new(indices, left, right))
    }
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), ..Self::default() }
    }

    /// Runs `body`, which returns the first failing witness (if any).
    pub fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<(), Witness>) -> bool {
        let outcome = body();
        let passed = outcome.is_ok();
        self.checks.push(Check { name: name.into(), passed, witness: outcome.err() });
        passed
    }

    /// Records a check whose outcome is already known and has no witness.
    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed, witness: None });
    }

    pub fn observe(&mut self, name: impl Into<String>, value: Vec<Rational>) {
        self.observations.push(Observation { name: name.into(), value });
    }

    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends another report's checks, prefixing their names with its suite.
    pub fn absorb(&mut self, other: VerificationReport) {
        use alloc::format;
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
        for mut o in other.observations {
            o.name = format!("{}/{}", other.suite, o.name);
            self.observations.push(o);
        }
    }
}
