//! Verification reports shared by every verifier.

use serde::Serialize;

use crate::lattice::{CubeSet, LocationLabel};

/// One failed check. Set mismatches carry the full symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<LocationLabel>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unexpected: Vec<LocationLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    pub pass: bool,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(theorem: impl Into<String>, n: i64) -> Report {
        Report {
            theorem: theorem.into(),
            n,
            p: None,
            pass: true,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn with_p(mut self, p: i64) -> Report {
        self.p = Some(p);
        self
    }

    pub fn fail(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure {
            check: check.into(),
            detail: detail.into(),
            missing: Vec::new(),
            unexpected: Vec::new(),
        });
        self.pass = false;
    }

    /// Records `check`; `detail` is only built on failure.
    pub fn check(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            self.fail(check, detail());
        }
        ok
    }

    pub fn check_eq<T: PartialEq + std::fmt::Display>(&mut self, check: &str, got: &T, want: &T) -> bool {
        self.check(check, got == want, || format!("got {got}, expected {want}"))
    }

    /// `got == want` as label sets. `missing` lists labels of `want` not in `got`.
    pub fn check_sets(&mut self, check: &str, got: &CubeSet, want: &CubeSet) -> bool {
        self.checks += 1;
        if got == want {
            return true;
        }
        let missing = want.difference(got).into_vec();
        let unexpected = got.difference(want).into_vec();
        self.failures.push(Failure {
            check: check.to_string(),
            detail: format!(
                "{} labels vs {} expected: {} missing, {} unexpected",
                got.len(),
                want.len(),
                missing.len(),
                unexpected.len()
            ),
            missing,
            unexpected,
        });
        self.pass = false;
        false
    }

    pub fn check_disjoint(&mut self, check: &str, s: &CubeSet, t: &CubeSet) -> bool {
        self.checks += 1;
        let shared = s.intersection(t);
        if shared.is_empty() {
            return true;
        }
        self.failures.push(Failure {
            check: check.to_string(),
            detail: format!("{} shared labels", shared.len()),
            missing: Vec::new(),
            unexpected: shared.into_vec(),
        });
        self.pass = false;
        false
    }

    /// Folds another report's checks into this one, prefixing its check names.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        for mut f in other.failures {
            f.check = format!("{}: {}", other.theorem, f.check);
            self.failures.push(f);
            self.pass = false;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
