//! JSON formats for algebras, row bundles and orbit certificates.
//!
//! Algebra: `{"field": "Q" | {"Fp": p}, "vars": [...], "relations": [...]}`.
//! Rows: `{"algebra": <path or inline algebra>, "rows": {name: [...]}}`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{make_algebra, Algebra};
use crate::arith::FieldConfig;
use crate::error::{Error, Result};
use crate::rows::{ElementaryWord, OrbitCertificate, UnimodularRow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum FieldJson {
    Name(String),
    Prime(FieldSpec),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    field: FieldJson,
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl AlgebraSpec {
    pub fn field(&self) -> Result<FieldConfig> {
        match &self.field {
            FieldJson::Name(s) if s == "Q" => Ok(FieldConfig::Rationals),
            FieldJson::Name(s) => Err(Error::InvalidField(format!("unknown field `{s}`"))),
            FieldJson::Prime(FieldSpec::Fp(p)) => FieldConfig::prime(*p),
            FieldJson::Prime(FieldSpec::Q) => Ok(FieldConfig::Rationals),
        }
    }

    pub fn build(&self) -> Result<Arc<Algebra>> {
        make_algebra(self.field()?, &self.vars, &self.relations)
    }

    pub fn of(algebra: &Algebra) -> Self {
        let field = match algebra.field() {
            FieldConfig::Rationals => FieldJson::Name("Q".into()),
            FieldConfig::PrimeField(p) => FieldJson::Prime(FieldSpec::Fp(p)),
        };
        AlgebraSpec {
            field,
            vars: algebra.names().to_vec(),
            relations: algebra
                .relations()
                .generators()
                .iter()
                .map(|r| r.to_string())
                .collect(),
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Input(format!("line {}, column {}: {e}", e.line(), e.column()))
}

pub fn parse_algebra_json(text: &str) -> Result<Arc<Algebra>> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(json_error)?;
    spec.build()
}

pub fn algebra_to_json(algebra: &Algebra) -> Value {
    serde_json::to_value(AlgebraSpec::of(algebra)).expect("serializable")
}

/// Named rows over a common algebra.
#[derive(Clone, Debug)]
pub struct RowsBundle {
    pub algebra: Arc<Algebra>,
    pub rows: BTreeMap<String, UnimodularRow>,
}

impl RowsBundle {
    pub fn get(&self, name: &str) -> Result<&UnimodularRow> {
        self.rows
            .get(name)
            .ok_or_else(|| Error::Input(format!("no row named `{name}`")))
    }
}

/// Parses a rows bundle; a string-valued `algebra` is a path relative to `base_dir`.
pub fn parse_rows_bundle(text: &str, base_dir: Option<&Path>) -> Result<RowsBundle> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Input("rows bundle must be a JSON object".into()))?;
    let algebra = match obj.get("algebra") {
        None | Some(Value::Null) => {
            return Err(Error::Input("rows bundle does not name an algebra".into()))
        }
        Some(Value::String(path)) => {
            let full = match base_dir {
                Some(dir) => dir.join(path),
                None => Path::new(path).to_path_buf(),
            };
            let text = std::fs::read_to_string(&full)
                .map_err(|e| Error::Input(format!("algebra file {}: {e}", full.display())))?;
            parse_algebra_json(&text)?
        }
        Some(inline) => {
            let spec: AlgebraSpec = serde_json::from_value(inline.clone()).map_err(json_error)?;
            spec.build()?
        }
    };
    let rows_value = obj
        .get("rows")
        .ok_or_else(|| Error::Input("rows bundle has no `rows` field".into()))?;
    let named: BTreeMap<String, Vec<String>> =
        serde_json::from_value(rows_value.clone()).map_err(json_error)?;
    let mut rows = BTreeMap::new();
    for (name, entries) in named {
        rows.insert(name, UnimodularRow::parse(&algebra, &entries)?);
    }
    Ok(RowsBundle { algebra, rows })
}

pub fn load_rows_bundle(path: &Path) -> Result<RowsBundle> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_rows_bundle(&text, path.parent())
}

pub fn row_to_json(row: &UnimodularRow) -> Value {
    Value::Array(
        row.entries()
            .iter()
            .map(|e| Value::String(e.to_string()))
            .collect(),
    )
}

pub fn certificate_to_json(cert: &OrbitCertificate) -> Value {
    serde_json::json!({
        "from": row_to_json(&cert.from),
        "to": row_to_json(&cert.to),
        "word": cert.word.to_json(),
    })
}

pub fn certificate_from_json(algebra: &Arc<Algebra>, value: &Value) -> Result<OrbitCertificate> {
    let row = |key: &str| -> Result<UnimodularRow> {
        let entries: Vec<String> =
            serde_json::from_value(value.get(key).cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Input(format!("certificate `{key}`: {e}")))?;
        UnimodularRow::parse(algebra, &entries)
    };
    let word = ElementaryWord::from_json(algebra, value.get("word").unwrap_or(&Value::Null))?;
    Ok(OrbitCertificate {
        from: row("from")?,
        to: row("to")?,
        word,
    })
}
