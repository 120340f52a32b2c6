use std::path::Path;

use serde_json::{json, Value};
use umrow_core::io::{load_rows_bundle, row_to_json, AlgebraSpec};
use umrow_core::poly::{parse_polynomial, Ideal, MonomialOrder, OrderKind, PolyRing};
use umrow_core::rows::{vdk_add, ShrinkConfig};

use crate::CliError;

pub fn parse_order(s: &str) -> Result<OrderKind, CliError> {
    match s {
        "lex" => Ok(OrderKind::Lex),
        "grevlex" => Ok(OrderKind::GrevLex),
        other => Err(CliError::Config(format!(
            "--order: expected lex or grevlex, got `{other}`"
        ))),
    }
}

/// Reduced Gröbner basis of the relations in an algebra description file.
pub fn gb(input: &Path, order: OrderKind) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
    let spec: AlgebraSpec = serde_json::from_str(&text).map_err(|e| {
        CliError::Config(format!(
            "{}: line {}, column {}: {e}",
            input.display(),
            e.line(),
            e.column()
        ))
    })?;
    let field = spec.field()?;
    let ring = PolyRing::new(field, spec.vars.iter().cloned())?;
    let gens = spec
        .relations
        .iter()
        .map(|r| parse_polynomial(&ring, r))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Ideal::new(&ring, gens)?;
    let gb = ideal.groebner_with(&MonomialOrder::new(order, ring.nvars()))?;
    let order_name = match order {
        OrderKind::Lex => "lex",
        OrderKind::GrevLex => "grevlex",
    };
    Ok(json!({
        "order": order_name,
        "vars": spec.vars,
        "basis": gb.basis().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "whole_ring": gb.is_whole_ring(),
    }))
}

/// van der Kallen sum of two named rows of a rows bundle.
pub fn add(rows: &Path, u: &str, v: &str, shrink: &ShrinkConfig) -> Result<Value, CliError> {
    let bundle = load_rows_bundle(rows)?;
    let s = vdk_add(bundle.get(u)?, bundle.get(v)?, shrink)?;
    Ok(json!({
        "sum": row_to_json(&s.sum),
        "x": s.mn.x.to_string(),
        "a": s.mn.a.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "eu": s.mn.eu.to_json(),
        "ev": s.mn.ev.to_json(),
        "warnings": s.warnings,
    }))
}
