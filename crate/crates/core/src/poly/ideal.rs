use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

use super::groebner::GroebnerBasis;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::{same_ring, PolyRing};

/// Ideal given by an ordered generator list. The Gröbner basis for the ring's own order is
/// computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `self + other`, generators concatenated in that order.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// The ideal with `extra` appended to the generators.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = GroebnerBasis::compute(&self.gens, &self.ring, self.ring.order())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn groebner_with(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        if order == self.ring.order() {
            return self.groebner().cloned();
        }
        GroebnerBasis::compute(&self.gens, &self.ring, order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner()?.normal_form(f)
    }

    pub fn lift(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        self.groebner()?.lift(f)
    }

    pub fn is_whole_ring(&self) -> Result<bool> {
        Ok(self.groebner()?.is_whole_ring())
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !self.ring.same_variables(&other.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of the quotient ring: the number of variables minus the smallest set of
    /// variables meeting the support of every leading monomial.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.groebner()?;
        if gb.is_whole_ring() {
            return Err(Error::DimensionOfZeroRing);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = gb
            .basis()
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").support().collect())
            .collect();
        let mut best = n;
        let mut chosen = vec![false; n];
        min_hitting_set(&supports, &mut chosen, 0, &mut best);
        Ok(n - best)
    }
}

fn min_hitting_set(sets: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some(open) = sets.iter().find(|s| !s.iter().any(|&v| chosen[v])) else {
        *best = size;
        return;
    };
    for &v in open {
        chosen[v] = true;
        min_hitting_set(sets, chosen, size + 1, best);
        chosen[v] = false;
    }
}
