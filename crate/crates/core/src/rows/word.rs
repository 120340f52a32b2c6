use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{same_algebra, Algebra, AlgebraElement};
use crate::error::{Error, Result};

use super::UnimodularRow;

/// `e_ij(λ) = I + λ·E_ij`; on a row it adds `λ·(entry i)` to entry `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryGen {
    pub i: usize,
    pub j: usize,
    pub lambda: AlgebraElement,
}

impl ElementaryGen {
    pub fn new(i: usize, j: usize, lambda: AlgebraElement) -> Result<Self> {
        if i == j {
            return Err(Error::ShapeError(format!(
                "elementary generator needs i != j, got {i}"
            )));
        }
        Ok(ElementaryGen { i, j, lambda })
    }
}

/// A product `g_1·g_2·…·g_k` of elementary matrices of size `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryWord {
    n: usize,
    gens: Vec<ElementaryGen>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    n: usize,
    gens: Vec<(usize, usize, String)>,
}

impl ElementaryWord {
    pub fn empty(n: usize) -> Self {
        ElementaryWord {
            n,
            gens: Vec::new(),
        }
    }

    pub fn new(n: usize, gens: Vec<ElementaryGen>) -> Result<Self> {
        let mut w = ElementaryWord::empty(n);
        for g in gens {
            w.push(g)?;
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[ElementaryGen] {
        &self.gens
    }

    pub fn push(&mut self, g: ElementaryGen) -> Result<()> {
        if g.i >= self.n || g.j >= self.n || g.i == g.j {
            return Err(Error::ShapeError(format!(
                "generator ({}, {}) out of range for size {}",
                g.i, g.j, self.n
            )));
        }
        if let Some(first) = self.gens.first() {
            if !same_algebra(first.lambda.parent(), g.lambda.parent()) {
                return Err(Error::RingMismatch);
            }
        }
        self.gens.push(g);
        Ok(())
    }

    /// Appends `e_ij(λ)` unless `λ = 0`.
    pub fn add(&mut self, i: usize, j: usize, lambda: AlgebraElement) -> Result<()> {
        if lambda.is_zero() {
            return Ok(());
        }
        self.push(ElementaryGen::new(i, j, lambda)?)
    }

    pub fn extend(&mut self, other: &ElementaryWord) -> Result<()> {
        if other.n != self.n {
            return Err(Error::ShapeError(format!(
                "word sizes {} and {}",
                self.n, other.n
            )));
        }
        for g in &other.gens {
            self.push(g.clone())?;
        }
        Ok(())
    }

    pub fn concat(&self, other: &ElementaryWord) -> Result<ElementaryWord> {
        let mut w = self.clone();
        w.extend(other)?;
        Ok(w)
    }

    /// `row · g_1 · … · g_k`.
    pub fn apply(&self, row: &[AlgebraElement]) -> Result<Vec<AlgebraElement>> {
        if row.len() != self.n {
            return Err(Error::ShapeError(format!(
                "word of size {} applied to a row of length {}",
                self.n,
                row.len()
            )));
        }
        if let (Some(g), Some(a)) = (self.gens.first(), row.first()) {
            if !same_algebra(g.lambda.parent(), a.parent()) {
                return Err(Error::RingMismatch);
            }
        }
        let mut out = row.to_vec();
        for g in &self.gens {
            out[g.j] = &out[g.j] + &(&g.lambda * &out[g.i]);
        }
        Ok(out)
    }

    /// The matrix of the word over `parent`.
    pub fn matrix(&self, parent: &Arc<Algebra>) -> Vec<Vec<AlgebraElement>> {
        let n = self.n;
        let mut m: Vec<Vec<AlgebraElement>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { parent.one() } else { parent.zero() })
                    .collect()
            })
            .collect();
        for g in &self.gens {
            // M·e_ij(λ): column j += λ·column i.
            for row in m.iter_mut() {
                if !row[g.i].is_zero() {
                    row[g.j] = &row[g.j] + &(&g.lambda * &row[g.i]);
                }
            }
        }
        m
    }

    /// The inverse word: reversed order, negated parameters.
    pub fn inverse(&self) -> ElementaryWord {
        ElementaryWord {
            n: self.n,
            gens: self
                .gens
                .iter()
                .rev()
                .map(|g| ElementaryGen {
                    i: g.i,
                    j: g.j,
                    lambda: -&g.lambda,
                })
                .collect(),
        }
    }

    /// The certificate JSON form, with one-based indices.
    pub fn to_json(&self) -> serde_json::Value {
        let w = WordJson {
            n: self.n,
            gens: self
                .gens
                .iter()
                .map(|g| (g.i + 1, g.j + 1, g.lambda.to_string()))
                .collect(),
        };
        serde_json::to_value(w).expect("serializable")
    }

    pub fn from_json(parent: &Arc<Algebra>, value: &serde_json::Value) -> Result<Self> {
        let w: WordJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Input(format!("bad certificate: {e}")))?;
        let mut word = ElementaryWord::empty(w.n);
        for (i, j, lambda) in w.gens {
            if i == 0 || j == 0 {
                return Err(Error::ShapeError(
                    "certificate indices are one-based".into(),
                ));
            }
            word.push(ElementaryGen::new(i - 1, j - 1, parent.parse(&lambda)?)?)?;
        }
        Ok(word)
    }
}

impl fmt::Display for ElementaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| format!("e{}{}({})", g.i + 1, g.j + 1, g.lambda))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Determinant of a square matrix over an algebra, by cofactor expansion with memoization
/// on the set of remaining columns.
pub fn determinant(parent: &Arc<Algebra>, m: &[Vec<AlgebraElement>]) -> Result<AlgebraElement> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeError(
            "determinant of a non-square matrix".into(),
        ));
    }
    if n > 20 {
        return Err(Error::Unsupported(format!("determinant of size {n}")));
    }
    let mut memo: HashMap<u32, AlgebraElement> = HashMap::new();
    Ok(minor(parent, m, 0, (1u32 << n) - 1, &mut memo))
}

fn minor(
    parent: &Arc<Algebra>,
    m: &[Vec<AlgebraElement>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, AlgebraElement>,
) -> AlgebraElement {
    if cols == 0 {
        return parent.one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = parent.zero();
    let mut sign_neg = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(parent, m, row + 1, cols & !(1 << c), memo);
            let t = entry * &sub;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Witness that `from · word = to`.
#[derive(Clone, Debug)]
pub struct OrbitCertificate {
    pub from: UnimodularRow,
    pub to: UnimodularRow,
    pub word: ElementaryWord,
}

impl OrbitCertificate {
    pub fn verify(&self) -> bool {
        verify_certificate(self)
    }
}

/// Replays the word on `from` and compares entrywise with `to`.
pub fn verify_certificate(cert: &OrbitCertificate) -> bool {
    if cert.from.len() != cert.to.len() {
        return false;
    }
    match cert.word.apply(cert.from.entries()) {
        Ok(out) => out
            .iter()
            .zip(cert.to.entries())
            .all(|(a, b)| a.equals(b).unwrap_or(false)),
        Err(_) => false,
    }
}
