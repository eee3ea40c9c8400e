//! Report schema for identity-verification runs.
//!
//! Every suite produces a list of named checks; each check either passes,
//! fails with a nonzero residual witness (printed in the element grammar so
//! it can be inspected by hand), or is skipped with a reason when outside
//! the configured resource bounds.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckItem {
    /// Stable identifier, unique within a run (e.g. "presentation/n=2/reflection/site1").
    pub id: String,
    /// What the identity says, in words.
    pub description: String,
    /// Inputs echoed for reproducibility.
    pub inputs: serde_json::Value,
    pub status: Status,
    /// Nonzero residual in the element grammar, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall time in milliseconds (zeroed in golden comparisons).
    pub wall_ms: u64,
}

impl CheckItem {
    pub fn pass(id: impl Into<String>, description: impl Into<String>) -> Self {
        CheckItem {
            id: id.into(),
            description: description.into(),
            inputs: serde_json::Value::Null,
            status: Status::Pass,
            witness: None,
            wall_ms: 0,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        description: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckItem {
            id: id.into(),
            description: description.into(),
            inputs: serde_json::Value::Null,
            status: Status::Fail,
            witness: Some(witness.into()),
            wall_ms: 0,
        }
    }

    pub fn skipped(id: impl Into<String>, description: impl Into<String>, reason: String) -> Self {
        CheckItem {
            id: id.into(),
            description: description.into(),
            inputs: serde_json::json!({ "reason": reason }),
            status: Status::Skipped,
            witness: None,
            wall_ms: 0,
        }
    }

    /// Pass/fail from a residual: zero residual passes, anything else carries
    /// its printed form as witness.
    pub fn residual<T: std::fmt::Display>(
        id: impl Into<String>,
        description: impl Into<String>,
        residual: Option<T>,
    ) -> Self {
        match residual {
            None => Self::pass(id, description),
            Some(r) => Self::fail(id, description, r.to_string()),
        }
    }

    pub fn with_inputs(mut self, inputs: serde_json::Value) -> Self {
        self.inputs = inputs;
        self
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// A full verification report. Deterministic given the configuration: items
/// are sorted by id and no randomness is used without a recorded seed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub suite: String,
    pub config: serde_json::Value,
    pub items: Vec<CheckItem>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, config: serde_json::Value, mut items: Vec<CheckItem>) -> Self {
        items.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for it in &items {
            match it.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report {
            tool: format!("loopn {}", env!("CARGO_PKG_VERSION")),
            suite: suite.to_string(),
            config,
            items,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Copy with wall times zeroed, for golden-file comparison.
    pub fn normalized(&self) -> Report {
        let mut r = self.clone();
        for it in &mut r.items {
            it.wall_ms = 0;
        }
        r
    }
}
