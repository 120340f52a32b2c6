use serde::Serialize;

use crate::config::{field_name, Suite, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub suite: Suite,
    pub n_min: usize,
    pub n_max: usize,
    pub field: String,
    pub seed: u64,
    pub shrink_budget: usize,
}

impl From<&SuiteConfig> for ConfigEcho {
    fn from(c: &SuiteConfig) -> Self {
        ConfigEcho {
            suite: c.suite,
            n_min: c.n_min,
            n_max: c.n_max,
            field: field_name(c.field),
            seed: c.seed,
            shrink_budget: c.shrink_budget,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub n: usize,
    pub field: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: &SuiteConfig, cases: Vec<CaseResult>) -> Self {
        let mut summary = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        Report {
            config: config.into(),
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    /// Pretty JSON with a trailing newline; field order follows the struct declarations.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
