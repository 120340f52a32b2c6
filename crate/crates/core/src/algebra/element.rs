use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::poly::{PolyOp, Polynomial};

use super::{same_algebra, Algebra};

/// Element of an [`Algebra`], stored as its normal form.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    parent: Arc<Algebra>,
    rep: Polynomial,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.parent, &other.parent) && self.rep == other.rep
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub(crate) fn from_normal_form(parent: &Arc<Algebra>, rep: Polynomial) -> Self {
        AlgebraElement {
            parent: parent.clone(),
            rep,
        }
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    /// The normal-form representative.
    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.rep.as_constant()
    }

    fn check_parent(&self, other: &AlgebraElement) -> Result<()> {
        if same_algebra(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Equality that reports elements of different algebras as an error.
    pub fn equals(&self, other: &AlgebraElement) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self.rep == other.rep)
    }

    pub fn checked(&self, other: &AlgebraElement, op: PolyOp) -> Result<AlgebraElement> {
        self.check_parent(other)?;
        Ok(match op {
            PolyOp::Add => self + other,
            PolyOp::Sub => self - other,
            PolyOp::Mul => self * other,
        })
    }

    fn wrap(&self, p: Polynomial) -> AlgebraElement {
        let rep = self.parent.normal_form(&p).expect("same ring");
        AlgebraElement::from_normal_form(&self.parent, rep)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement::from_normal_form(&self.parent, self.rep.scale(c))
    }

    pub fn pow(&self, mut e: u32) -> AlgebraElement {
        let mut base = self.clone();
        let mut acc = self.parent.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The inverse, when the element is a unit.
    ///
    /// Decided by asking whether `1 ∈ I + ⟨rep⟩` in the ambient polynomial ring; the lift
    /// coefficient on `rep` is the inverse.
    pub fn inverse(&self) -> Option<AlgebraElement> {
        if let Some(c) = self.rep.as_constant() {
            return c.inverse().ok().map(|i| self.parent.constant(i));
        }
        let ideal = self
            .parent
            .relations()
            .with_generators([self.rep.clone()])
            .expect("same ring");
        let one = Polynomial::one(self.parent.ring());
        let coeffs = ideal.lift(&one).ok()?;
        let inv = self.wrap(coeffs.last().expect("rep is a generator").clone());
        debug_assert!((&inv * self).is_one());
        Some(inv)
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Evaluates the element at a point of the ambient affine space, given by scalars for
    /// each variable. Meaningful only when the point satisfies the relations.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let ring = self.parent.ring();
        if point.len() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = ring.field().zero();
        for (m, c) in self.rep.terms() {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.checked(&point[i], crate::arith::ScalarOp::Mul)?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            same_algebra(&self.parent, &rhs.parent),
            "elements of different algebras"
        );
        // Normal forms are closed under addition.
        AlgebraElement::from_normal_form(&self.parent, &self.rep + &rhs.rep)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            same_algebra(&self.parent, &rhs.parent),
            "elements of different algebras"
        );
        AlgebraElement::from_normal_form(&self.parent, &self.rep - &rhs.rep)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            same_algebra(&self.parent, &rhs.parent),
            "elements of different algebras"
        );
        self.wrap(&self.rep * &rhs.rep)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement::from_normal_form(&self.parent, -&self.rep)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $f(self, rhs: AlgebraElement) -> AlgebraElement { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}
