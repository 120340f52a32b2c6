//! Finitely presented algebras `k[x]/I`, their elements in normal form, and homomorphisms.

mod element;
mod hom;

use std::fmt;
use std::sync::Arc;

use crate::arith::{FieldConfig, Scalar};
use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, same_ring, GroebnerBasis, Ideal, PolyRing, Polynomial};

pub use element::AlgebraElement;
pub use hom::RingHom;

/// `k[x_1..x_m] / I`. The Gröbner basis of `I` is computed at construction and shared.
#[derive(Debug)]
pub struct Algebra {
    ring: Arc<PolyRing>,
    relations: Ideal,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.relations.generators() == other.relations.generators()
    }
}

impl Eq for Algebra {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Builds `field[vars] / ⟨relations⟩` from relation strings.
pub fn make_algebra<S: AsRef<str>>(
    field: FieldConfig,
    vars: &[S],
    relations: &[S],
) -> Result<Arc<Algebra>> {
    let ring = PolyRing::new(field, vars.iter().map(|v| v.as_ref().to_string()))?;
    let rels = relations
        .iter()
        .map(|r| parse_polynomial(&ring, r.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Algebra::new(&ring, rels)
}

impl Algebra {
    pub fn new(ring: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<Self>> {
        let relations = Ideal::new(ring, relations)?;
        if relations.is_whole_ring()? {
            return Err(Error::ZeroRing);
        }
        Ok(Arc::new(Algebra {
            ring: ring.clone(),
            relations,
        }))
    }

    /// The polynomial ring `k[x]` itself.
    pub fn polynomial_ring(ring: &Arc<PolyRing>) -> Arc<Self> {
        Self::new(ring, Vec::new()).expect("a polynomial ring is nonzero")
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> FieldConfig {
        self.ring.field()
    }

    pub fn names(&self) -> &[String] {
        self.ring.names()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.relations.groebner().expect("computed at construction")
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.ring().same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        self.groebner().normal_form(&p.in_ring(&self.ring))
    }

    pub fn element(self: &Arc<Self>, p: &Polynomial) -> Result<AlgebraElement> {
        let rep = self.normal_form(p)?;
        Ok(AlgebraElement::from_normal_form(self, rep))
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<AlgebraElement> {
        self.element(&parse_polynomial(&self.ring, text)?)
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<AlgebraElement> {
        let i = self
            .ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.var_at(i))
    }

    pub fn var_at(self: &Arc<Self>, i: usize) -> AlgebraElement {
        self.element(&Polynomial::var(&self.ring, i))
            .expect("same ring")
    }

    pub fn vars(self: &Arc<Self>) -> Vec<AlgebraElement> {
        (0..self.nvars()).map(|i| self.var_at(i)).collect()
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> AlgebraElement {
        self.element(&Polynomial::constant(&self.ring, c))
            .expect("same ring")
    }

    pub fn from_i64(self: &Arc<Self>, v: i64) -> AlgebraElement {
        self.constant(self.field().from_i64(v))
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraElement {
        self.from_i64(0)
    }

    pub fn one(self: &Arc<Self>) -> AlgebraElement {
        self.from_i64(1)
    }

    /// The ideal `⟨reps of elems⟩ + I` in the ambient ring; the elements come first.
    pub fn ideal_of(self: &Arc<Self>, elems: &[AlgebraElement]) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(elems.len() + self.relations.generators().len());
        for e in elems {
            if !same_algebra(e.parent(), self) {
                return Err(Error::RingMismatch);
            }
            gens.push(e.rep().clone());
        }
        gens.extend(self.relations.generators().iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Whether `elems` generate the unit ideal of the algebra.
    pub fn generates_unit_ideal(self: &Arc<Self>, elems: &[AlgebraElement]) -> Result<bool> {
        self.ideal_of(elems)?.is_whole_ring()
    }

    /// Whether two lists of elements generate the same ideal of the algebra.
    pub fn ideals_equal(
        self: &Arc<Self>,
        a: &[AlgebraElement],
        b: &[AlgebraElement],
    ) -> Result<bool> {
        self.ideal_of(a)?.equals(&self.ideal_of(b)?)
    }

    /// Whether `f` lies in the ideal generated by `elems`.
    pub fn ideal_contains(
        self: &Arc<Self>,
        elems: &[AlgebraElement],
        f: &AlgebraElement,
    ) -> Result<bool> {
        self.ideal_of(elems)?.contains(f.rep())
    }

    /// Coefficients `c` with `f = Σ c_i·elems[i]` in the algebra.
    pub fn lift(
        self: &Arc<Self>,
        f: &AlgebraElement,
        elems: &[AlgebraElement],
    ) -> Result<Vec<AlgebraElement>> {
        if !same_algebra(f.parent(), self) {
            return Err(Error::RingMismatch);
        }
        let coeffs = self.ideal_of(elems)?.lift(f.rep())?;
        coeffs[..elems.len()]
            .iter()
            .map(|c| self.element(c))
            .collect()
    }

    /// The quotient by additional relations, over the same variables.
    pub fn quotient(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Arc<Algebra>> {
        let mut rels = self.relations.generators().to_vec();
        for p in extra {
            if !p.ring().same_variables(&self.ring) {
                return Err(Error::RingMismatch);
            }
            rels.push(p.in_ring(&self.ring));
        }
        Algebra::new(&self.ring, rels)
    }

    /// `A[name, name_inv] / ⟨name·name_inv − 1⟩`.
    pub fn adjoin_unit_variable(&self, name: &str) -> Result<Arc<Algebra>> {
        let inv = format!("{name}_inv");
        for n in [name, inv.as_str()] {
            if self.ring.index_of(n).is_some() {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
        }
        let mut names = self.ring.names().to_vec();
        names.push(name.to_string());
        names.push(inv);
        let ring = PolyRing::new(self.field(), names)?;
        let map: Vec<usize> = (0..self.nvars()).collect();
        let mut rels: Vec<Polynomial> = self
            .relations
            .generators()
            .iter()
            .map(|r| r.rename_into(&ring, &map))
            .collect();
        let m = self.nvars();
        let t = Polynomial::var(&ring, m);
        let t_inv = Polynomial::var(&ring, m + 1);
        rels.push(&(&t * &t_inv) - &Polynomial::one(&ring));
        Algebra::new(&ring, rels)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field() {
            FieldConfig::Rationals => "Q".to_string(),
            FieldConfig::PrimeField(p) => format!("F{p}"),
        };
        write!(f, "{field}[{}]", self.names().join(", "))?;
        let rels = self.relations.generators();
        if !rels.is_empty() {
            let shown: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
            write!(f, " / <{}>", shown.join(", "))?;
        }
        Ok(())
    }
}
