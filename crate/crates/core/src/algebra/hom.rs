use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

use super::{same_algebra, Algebra, AlgebraElement};

/// Algebra homomorphism `source → target`, given by the image of each source variable.
///
/// A morphism of schemes `X → Y` is stored as the algebra map `k[Y] → k[X]`.
#[derive(Clone, Debug)]
pub struct RingHom {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    images: Vec<AlgebraElement>,
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.source, &other.source) && self.images == other.images
    }
}

impl RingHom {
    /// Builds the map and checks that every source relation is sent to zero.
    pub fn new(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        images: Vec<AlgebraElement>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::ArityMismatch {
                expected: source.nvars(),
                got: images.len(),
            });
        }
        if images.iter().any(|e| !same_algebra(e.parent(), target)) {
            return Err(Error::RingMismatch);
        }
        if source.field() != target.field() {
            return Err(Error::FieldMismatch);
        }
        let hom = RingHom {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        for (index, r) in source.relations().generators().iter().enumerate() {
            let residue = hom.apply_poly(r)?;
            if !residue.is_zero() {
                return Err(Error::NotWellDefined {
                    index,
                    residue: residue.to_string(),
                });
            }
        }
        Ok(hom)
    }

    /// Builds the map from image strings parsed in the target.
    pub fn parse<S: AsRef<str>>(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        images: &[S],
    ) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| target.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        RingHom::new(source, target, images)
    }

    pub fn identity(a: &Arc<Algebra>) -> Self {
        RingHom {
            source: a.clone(),
            target: a.clone(),
            images: a.vars(),
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    /// Image of the source variable called `name`.
    pub fn image_of(&self, name: &str) -> Result<&AlgebraElement> {
        let i = self
            .source
            .ring()
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(&self.images[i])
    }

    /// Image of a polynomial over the source variables.
    pub fn apply_poly(&self, p: &Polynomial) -> Result<AlgebraElement> {
        if !p.ring().same_variables(self.source.ring()) {
            return Err(Error::RingMismatch);
        }
        let reps: Vec<Polynomial> = self.images.iter().map(|e| e.rep().clone()).collect();
        self.target
            .element(&p.substitute_into(self.target.ring(), &reps))
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if !same_algebra(a.parent(), &self.source) {
            return Err(Error::RingMismatch);
        }
        self.apply_poly(a.rep())
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &RingHom) -> Result<RingHom> {
        if !same_algebra(&inner.target, &self.source) {
            return Err(Error::RingMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|e| self.apply(e))
            .collect::<Result<Vec<_>>>()?;
        RingHom::new(&inner.source, &self.target, images)
    }
}

impl fmt::Display for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .source
            .names()
            .iter()
            .zip(&self.images)
            .map(|(n, e)| format!("{n} -> {e}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
