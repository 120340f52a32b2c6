use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use umrow_core::FieldConfig;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Rows,
    Fold,
    Euler,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "identities" => Ok(Suite::Identities),
            "rows" => Ok(Suite::Rows),
            "fold" => Ok(Suite::Fold),
            "euler" => Ok(Suite::Euler),
            "all" => Ok(Suite::All),
            other => Err(CliError::Config(format!(
                "--suite: unknown suite `{other}` (expected identities, rows, fold, euler or all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Identities => "identities",
            Suite::Rows => "rows",
            Suite::Fold => "fold",
            Suite::Euler => "euler",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// `q` or `fp:<p>`.
pub fn parse_field(s: &str) -> Result<FieldConfig, CliError> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldConfig::Rationals);
    }
    let p = s
        .strip_prefix("fp:")
        .ok_or_else(|| CliError::Config(format!("--field: expected `q` or `fp:<p>`, got `{s}`")))?;
    let p: u64 = p
        .parse()
        .map_err(|_| CliError::Config(format!("--field: `{p}` is not an integer")))?;
    FieldConfig::prime(p).map_err(|e| CliError::Config(format!("--field: {e}")))
}

pub fn field_name(field: FieldConfig) -> String {
    match field {
        FieldConfig::Rationals => "q".into(),
        FieldConfig::PrimeField(p) => format!("fp:{p}"),
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n_min: usize,
    pub n_max: usize,
    pub field: FieldConfig,
    pub seed: u64,
    pub shrink_budget: usize,
}

impl SuiteConfig {
    pub const N_LIMIT: usize = 6;

    pub fn new(suite: Suite, n_min: usize, n_max: usize, field: FieldConfig) -> Self {
        SuiteConfig {
            suite,
            n_min,
            n_max,
            field,
            seed: 0,
            shrink_budget: 200,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_min < 1 {
            return Err(CliError::Config("--n-min: must be at least 1".into()));
        }
        if self.n_min > self.n_max {
            return Err(CliError::Config(format!(
                "--n-min: {} exceeds --n-max {}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > Self::N_LIMIT {
            return Err(CliError::Config(format!(
                "--n-max: {} exceeds the limit {}",
                self.n_max,
                Self::N_LIMIT
            )));
        }
        if self.shrink_budget == 0 {
            return Err(CliError::Config("--shrink-budget: must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), FieldConfig::Rationals);
        assert_eq!(parse_field("fp:5").unwrap(), FieldConfig::PrimeField(5));
        assert!(parse_field("fp:6").is_err());
        assert!(parse_field("r").is_err());
        assert_eq!(field_name(FieldConfig::PrimeField(7)), "fp:7");
    }

    #[test]
    fn ranges() {
        let mut c = SuiteConfig::new(Suite::All, 2, 4, FieldConfig::Rationals);
        assert!(c.validate().is_ok());
        c.n_max = 7;
        assert!(c.validate().is_err());
        c.n_max = 1;
        assert!(c.validate().is_err());
    }
}
