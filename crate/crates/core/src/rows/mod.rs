//! Unimodular rows over finitely presented algebras and the elementary-matrix calculus.
//!
//! Rows are acted on from the right: `e_ij(λ)` adds `λ·(entry i)` to entry `j`. Indices are
//! zero-based in the API and one-based in the JSON certificate format.

mod macros;
mod mennicke;
mod word;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};

pub use macros::{macro_expand, MoveMacro};
pub use mennicke::{mennicke_newman, vdk_add, MennickeNewman, ShrinkConfig, VdkSum};
pub use word::{determinant, verify_certificate, ElementaryGen, ElementaryWord, OrbitCertificate};

/// A row `(a_1, ..., a_n)` with `n ≥ 2`; `verified` records a successful unimodularity check.
#[derive(Clone, Debug)]
pub struct UnimodularRow {
    parent: Arc<Algebra>,
    entries: Vec<AlgebraElement>,
    verified: bool,
}

impl PartialEq for UnimodularRow {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

fn check_parent(parent: &Arc<Algebra>, entries: &[AlgebraElement]) -> Result<()> {
    if entries
        .iter()
        .all(|e| crate::algebra::same_algebra(e.parent(), parent))
    {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Checks that `entries` generate the unit ideal and returns the verified row.
pub fn check_unimodular(
    parent: &Arc<Algebra>,
    entries: Vec<AlgebraElement>,
) -> Result<UnimodularRow> {
    let row = UnimodularRow::unchecked(parent, entries)?;
    if !parent.generates_unit_ideal(&row.entries)? {
        return Err(Error::NotUnimodular);
    }
    Ok(UnimodularRow {
        verified: true,
        ..row
    })
}

/// A splitting `b` of `row`: `Σ a_i·b_i = 1`.
pub fn compute_splitting(row: &UnimodularRow) -> Result<SplittingRow> {
    let one = row.parent.one();
    let entries = row.parent.lift(&one, &row.entries).map_err(|e| match e {
        Error::NotInIdeal => Error::NotUnimodular,
        other => other,
    })?;
    SplittingRow::new(row, entries)
}

impl UnimodularRow {
    /// A row that has not been checked for unimodularity.
    pub fn unchecked(parent: &Arc<Algebra>, entries: Vec<AlgebraElement>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::ShapeError(format!(
                "rows need length at least 2, got {}",
                entries.len()
            )));
        }
        check_parent(parent, &entries)?;
        Ok(UnimodularRow {
            parent: parent.clone(),
            entries,
            verified: false,
        })
    }

    pub fn new(parent: &Arc<Algebra>, entries: Vec<AlgebraElement>) -> Result<Self> {
        check_unimodular(parent, entries)
    }

    pub fn parse<S: AsRef<str>>(parent: &Arc<Algebra>, entries: &[S]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|s| parent.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        check_unimodular(parent, entries)
    }

    /// `(0, ..., 0, 1)`.
    pub fn base_row(parent: &Arc<Algebra>, n: usize) -> Result<Self> {
        let mut entries = vec![parent.zero(); n];
        if let Some(last) = entries.last_mut() {
            *last = parent.one();
        }
        check_unimodular(parent, entries)
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<AlgebraElement> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs the unimodularity check again.
    pub fn reverify(&self) -> Result<UnimodularRow> {
        check_unimodular(&self.parent, self.entries.clone())
    }

    pub fn splitting(&self) -> Result<SplittingRow> {
        compute_splitting(self)
    }

    pub fn apply(&self, word: &ElementaryWord) -> Result<UnimodularRow> {
        let entries = word.apply(&self.entries)?;
        Ok(UnimodularRow {
            parent: self.parent.clone(),
            entries,
            verified: self.verified,
        })
    }

    pub(crate) fn with_entries(&self, entries: Vec<AlgebraElement>) -> UnimodularRow {
        UnimodularRow {
            parent: self.parent.clone(),
            entries,
            verified: false,
        }
    }
}

impl fmt::Display for UnimodularRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `row · word`, keeping the verification flag since elementary matrices preserve unimodularity.
pub fn apply_word(row: &UnimodularRow, word: &ElementaryWord) -> Result<UnimodularRow> {
    row.apply(word)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplittingRow {
    row: Vec<AlgebraElement>,
    entries: Vec<AlgebraElement>,
}

impl SplittingRow {
    /// Checks `Σ row_i·entries_i = 1`.
    pub fn new(row: &UnimodularRow, entries: Vec<AlgebraElement>) -> Result<Self> {
        if entries.len() != row.len() {
            return Err(Error::ShapeError(format!(
                "splitting of length {} for a row of length {}",
                entries.len(),
                row.len()
            )));
        }
        check_parent(&row.parent, &entries)?;
        let s = SplittingRow {
            row: row.entries.clone(),
            entries,
        };
        if !s.pairing().is_one() {
            return Err(Error::BadCertificate("splitting does not pair to 1".into()));
        }
        Ok(s)
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn row(&self) -> &[AlgebraElement] {
        &self.row
    }

    /// `Σ row_i·entries_i`.
    pub fn pairing(&self) -> AlgebraElement {
        let parent = self.row[0].parent();
        self.row
            .iter()
            .zip(&self.entries)
            .fold(parent.zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_algebra;
    use crate::arith::FieldConfig;

    #[test]
    fn unimodularity() {
        let s2 =
            make_algebra(FieldConfig::Rationals, &["x", "y", "z"], &["x^2+y^2+z^2-1"]).unwrap();
        let row = UnimodularRow::parse(&s2, &["x", "y", "z"]).unwrap();
        assert!(row.is_verified());
        let sp = compute_splitting(&row).unwrap();
        assert!(sp.pairing().is_one());
        assert!(UnimodularRow::base_row(&s2, 4).is_ok());

        let plane = make_algebra(FieldConfig::Rationals, &["x", "y"], &[]).unwrap();
        assert_eq!(
            UnimodularRow::parse(&plane, &["x", "y"]).unwrap_err(),
            Error::NotUnimodular
        );
        assert!(matches!(
            UnimodularRow::parse(&plane, &["1"]),
            Err(Error::ShapeError(_))
        ));

        let q = make_algebra::<&str>(FieldConfig::Rationals, &[], &[]).unwrap();
        let row = UnimodularRow::parse(&q, &["2", "3"]).unwrap();
        assert!(compute_splitting(&row).unwrap().pairing().is_one());
        let row = UnimodularRow::parse(&plane, &["1", "x*y"]).unwrap();
        assert!(compute_splitting(&row).unwrap().pairing().is_one());
    }
}
