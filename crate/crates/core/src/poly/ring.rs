use std::sync::Arc;

use crate::arith::FieldConfig;
use crate::error::{Error, Result};

use super::order::{MonomialOrder, OrderKind};

/// Ambient polynomial ring `k[x_1, ..., x_m]` with the order used to sort terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: FieldConfig,
    order: MonomialOrder,
}

impl PolyRing {
    /// Ring with grevlex over declaration order.
    pub fn new<S: Into<String>>(
        field: FieldConfig,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let order = MonomialOrder::grevlex(names.len());
        Self::with_order(field, names, order)
    }

    pub fn with_order(
        field: FieldConfig,
        names: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Input(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        if order.nvars() != names.len() {
            return Err(Error::ShapeError(format!(
                "order over {} variables for a ring with {}",
                order.nvars(),
                names.len()
            )));
        }
        Ok(Arc::new(PolyRing {
            names,
            field,
            order,
        }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::with_order(self.field, self.names.clone(), order)
    }

    pub fn reordered_kind(&self, kind: OrderKind) -> Arc<Self> {
        Arc::new(PolyRing {
            names: self.names.clone(),
            field: self.field,
            order: MonomialOrder::new(kind, self.names.len()),
        })
    }

    /// Same variables and field; orders may differ.
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.names == other.names
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Checks that two ring handles describe the same ring.
pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
