//! The split quadrics `Q_{2n+1}: Σ x_i y_i = 1` and `Q_{2n}: Σ x_i y_i = z(1 − z)`, their
//! points with values in an algebra, and the explicit morphisms between them.
//!
//! A morphism of schemes `X → Y` is always represented by the algebra map `k[Y] → k[X]`.

mod euler;
mod fold;
mod maps;

use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra, AlgebraElement, RingHom};
use crate::arith::{FieldConfig, Scalar};
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};
use crate::rows::{compute_splitting, SplittingRow, UnimodularRow};

pub use euler::{
    degree_after_mu_minus_one, delta_map, phi_map, phi_matches_eta, OrientedIdeal, PhiResult,
};
pub use fold::{fold_model_certificate, fold_model_row, tamper, FoldModelRow, VTildeRing};
pub use maps::{
    a_of, b_of, degree_action, e_endo, eta_hom, eta_ideal_equality, evaluate_lambda,
    mu_ab_identity, mu_hom, mu_prime_basepoint_check, mu_prime_formula, mu_prime_hom,
    x_last_inverse_mod_ix, GmQuadricRing,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadricKind {
    /// `Q_{2n+1}` on `x_1..x_{n+1}, y_1..y_{n+1}`.
    Odd,
    /// `Q_{2n}` on `x_1..x_n, y_1..y_n, z`.
    Even,
}

/// Coordinate ring of a quadric together with its base point.
#[derive(Clone, Debug)]
pub struct Quadric {
    kind: QuadricKind,
    n: usize,
    algebra: Arc<Algebra>,
    base_point: Vec<Scalar>,
}

/// `k[Q_{2n+1}] = k[x_1..x_{n+1}, y_1..y_{n+1}] / ⟨Σ x_i y_i − 1⟩`, based at `(0,…,0,1,0,…,0,1)`.
pub fn build_q_odd(n: usize, field: FieldConfig) -> Result<Quadric> {
    let m = n + 1;
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    names.extend((1..=m).map(|i| format!("y{i}")));
    let ring = PolyRing::new(field, names)?;
    let mut rel = Polynomial::from_i64(&ring, -1);
    for i in 0..m {
        rel = &rel + &(&Polynomial::var(&ring, i) * &Polynomial::var(&ring, m + i));
    }
    let algebra = Algebra::new(&ring, vec![rel])?;
    let mut base_point = vec![field.zero(); 2 * m];
    base_point[m - 1] = field.one();
    base_point[2 * m - 1] = field.one();
    Ok(Quadric {
        kind: QuadricKind::Odd,
        n,
        algebra,
        base_point,
    })
}

/// `k[Q_{2n}] = k[x_1..x_n, y_1..y_n, z] / ⟨Σ x_i y_i − z(1 − z)⟩`, based at the origin.
pub fn build_q_even(n: usize, field: FieldConfig) -> Result<Quadric> {
    if n == 0 {
        return Err(Error::ShapeError("Q_{2n} needs n >= 1".into()));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("z".into());
    let ring = PolyRing::new(field, names)?;
    let z = Polynomial::var(&ring, 2 * n);
    let mut rel = &(&z * &z) - &z;
    for i in 0..n {
        rel = &rel + &(&Polynomial::var(&ring, i) * &Polynomial::var(&ring, n + i));
    }
    let algebra = Algebra::new(&ring, vec![rel])?;
    Ok(Quadric {
        kind: QuadricKind::Even,
        n,
        algebra,
        base_point: vec![field.zero(); 2 * n + 1],
    })
}

impl Quadric {
    pub fn kind(&self) -> QuadricKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `m` of `Q_m`.
    pub fn dimension_index(&self) -> usize {
        match self.kind {
            QuadricKind::Odd => 2 * self.n + 1,
            QuadricKind::Even => 2 * self.n,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldConfig {
        self.algebra.field()
    }

    pub fn base_point(&self) -> &[Scalar] {
        &self.base_point
    }

    /// The defining relation.
    pub fn relation(&self) -> &Polynomial {
        &self.algebra.relations().generators()[0]
    }

    pub fn base_point_satisfies_relation(&self) -> bool {
        // Evaluate the raw relation: in the quotient it is already zero.
        let free = Algebra::polynomial_ring(self.algebra.ring());
        let rel = free.element(self.relation()).expect("same ring");
        matches!(rel.eval(&self.base_point), Ok(v) if v.is_zero())
    }

    /// The base point as an algebra map `k[Q] → target`.
    pub fn base_point_hom(&self, target: &Arc<Algebra>) -> Result<RingHom> {
        let images = self
            .base_point
            .iter()
            .map(|c| target.constant(c.clone()))
            .collect();
        RingHom::new(&self.algebra, target, images)
    }

    /// The generic point, i.e. the identity of `k[Q]`.
    pub fn generic_point(&self) -> Vec<AlgebraElement> {
        self.algebra.vars()
    }
}

/// A point `(x, y)` of `Q_{2m−1}` with values in `parent`: `Σ x_i y_i = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricOddPoint {
    pub x: Vec<AlgebraElement>,
    pub y: Vec<AlgebraElement>,
}

impl QuadricOddPoint {
    pub fn new(x: Vec<AlgebraElement>, y: Vec<AlgebraElement>) -> Result<Self> {
        if x.is_empty() || x.len() != y.len() {
            return Err(Error::ShapeError(
                "odd quadric points need x and y of equal positive length".into(),
            ));
        }
        let parent = x[0].parent().clone();
        if x.iter()
            .chain(&y)
            .any(|e| !same_algebra(e.parent(), &parent))
        {
            return Err(Error::RingMismatch);
        }
        let p = QuadricOddPoint { x, y };
        if !p.pairing().is_one() {
            return Err(Error::BadCertificate(format!(
                "Σ x_i y_i − 1 = {}",
                &p.pairing() - &parent.one()
            )));
        }
        Ok(p)
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        self.x[0].parent()
    }

    pub fn pairing(&self) -> AlgebraElement {
        let parent = self.parent();
        self.x
            .iter()
            .zip(&self.y)
            .fold(parent.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// The classifying map `k[Q_{2m−1}] → parent`.
    pub fn to_hom(&self, q: &Quadric) -> Result<RingHom> {
        if q.kind != QuadricKind::Odd || q.n + 1 != self.x.len() {
            return Err(Error::ShapeError("point and quadric do not match".into()));
        }
        let images = self.x.iter().chain(&self.y).cloned().collect();
        RingHom::new(q.algebra(), self.parent(), images)
    }

    pub fn from_hom(h: &RingHom) -> Result<Self> {
        let im = h.images();
        if !im.len().is_multiple_of(2) || im.is_empty() {
            return Err(Error::ShapeError("not an odd quadric map".into()));
        }
        let m = im.len() / 2;
        QuadricOddPoint::new(im[..m].to_vec(), im[m..].to_vec())
    }
}

/// A point `(x, y, z)` of `Q_{2n}` with values in `parent`: `Σ x_i y_i = z(1 − z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricEvenPoint {
    pub x: Vec<AlgebraElement>,
    pub y: Vec<AlgebraElement>,
    pub z: AlgebraElement,
}

impl QuadricEvenPoint {
    pub fn new(x: Vec<AlgebraElement>, y: Vec<AlgebraElement>, z: AlgebraElement) -> Result<Self> {
        if x.is_empty() || x.len() != y.len() {
            return Err(Error::ShapeError(
                "even quadric points need x and y of equal positive length".into(),
            ));
        }
        let parent = z.parent().clone();
        if x.iter()
            .chain(&y)
            .any(|e| !same_algebra(e.parent(), &parent))
        {
            return Err(Error::RingMismatch);
        }
        let p = QuadricEvenPoint { x, y, z };
        let defect = p.defect();
        if !defect.is_zero() {
            return Err(Error::BadCertificate(format!(
                "Σ x_i y_i − z(1 − z) = {defect}"
            )));
        }
        Ok(p)
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        self.z.parent()
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `Σ x_i y_i − z(1 − z)`.
    pub fn defect(&self) -> AlgebraElement {
        let parent = self.parent();
        let s = self
            .x
            .iter()
            .zip(&self.y)
            .fold(parent.zero(), |acc, (a, b)| &acc + &(a * b));
        &s - &(&self.z * &(&parent.one() - &self.z))
    }

    pub fn to_hom(&self, q: &Quadric) -> Result<RingHom> {
        if q.kind != QuadricKind::Even || q.n != self.x.len() {
            return Err(Error::ShapeError("point and quadric do not match".into()));
        }
        let mut images: Vec<AlgebraElement> = self.x.iter().chain(&self.y).cloned().collect();
        images.push(self.z.clone());
        RingHom::new(q.algebra(), self.parent(), images)
    }

    pub fn from_hom(h: &RingHom) -> Result<Self> {
        let im = h.images();
        if im.len() % 2 != 1 || im.len() < 3 {
            return Err(Error::ShapeError("not an even quadric map".into()));
        }
        let n = im.len() / 2;
        QuadricEvenPoint::new(im[..n].to_vec(), im[n..2 * n].to_vec(), im[2 * n].clone())
    }

    /// The generic point of `k[Q_{2n}]`.
    pub fn generic(q: &Quadric) -> Result<Self> {
        if q.kind != QuadricKind::Even {
            return Err(Error::ShapeError(
                "generic even point of an odd quadric".into(),
            ));
        }
        let v = q.algebra.vars();
        let n = q.n;
        QuadricEvenPoint::new(v[..n].to_vec(), v[n..2 * n].to_vec(), v[2 * n].clone())
    }
}

/// The point `(a, b)` of `Q_{2n−1}` given by a unimodular row and its computed splitting.
pub fn jouanolou_lift(row: &UnimodularRow) -> Result<QuadricOddPoint> {
    let b = compute_splitting(row)?;
    QuadricOddPoint::new(row.entries().to_vec(), b.entries().to_vec())
}

/// The `Q_{2n}` point attached to a row `(a_1..a_{n+1})` with splitting `b`:
/// `x_i = a_i (i < n)`, `x_n = a_n a_{n+1}`, `y_i = b_i a_{n+1} b_{n+1} (i < n)`,
/// `y_n = b_n b_{n+1}`, `z = Σ_{i≤n} a_i b_i`.
///
/// Also checks that `⟨a_1..a_n⟩ = ⟨x_1..x_n, z⟩`.
pub fn segre_point(row: &UnimodularRow, splitting: &SplittingRow) -> Result<QuadricEvenPoint> {
    let a = row.entries();
    let b = splitting.entries();
    if b.len() != a.len() || splitting.row() != a {
        return Err(Error::ShapeError(
            "splitting does not belong to the row".into(),
        ));
    }
    if a.len() < 2 {
        return Err(Error::ShapeError(
            "segre point needs a row of length at least 2".into(),
        ));
    }
    let n = a.len() - 1;
    let parent = row.parent();
    let (an1, bn1) = (&a[n], &b[n]);
    let ab = an1 * bn1;
    let mut x: Vec<AlgebraElement> = a[..n - 1].to_vec();
    x.push(&a[n - 1] * an1);
    let mut y: Vec<AlgebraElement> = b[..n - 1].iter().map(|bi| bi * &ab).collect();
    y.push(&b[n - 1] * bn1);
    let z = a[..n]
        .iter()
        .zip(&b[..n])
        .fold(parent.zero(), |acc, (ai, bi)| &acc + &(ai * bi));
    let point = QuadricEvenPoint::new(x, y, z)?;
    let mut gens = point.x.clone();
    gens.push(point.z.clone());
    if !parent.ideals_equal(&a[..n], &gens)? {
        return Err(Error::BadCertificate("⟨a_1..a_n⟩ ≠ ⟨x_1..x_n, z⟩".into()));
    }
    Ok(point)
}

/// `k[a_1..a_{n+1}, b_1..b_{n+1}] / ⟨Σ a_i b_i − 1⟩` with its universal row and splitting.
pub fn universal_row(len: usize, field: FieldConfig) -> Result<(UnimodularRow, SplittingRow)> {
    let mut names: Vec<String> = (1..=len).map(|i| format!("a{i}")).collect();
    names.extend((1..=len).map(|i| format!("b{i}")));
    let ring = PolyRing::new(field, names)?;
    let mut rel = Polynomial::from_i64(&ring, -1);
    for i in 0..len {
        rel = &rel + &(&Polynomial::var(&ring, i) * &Polynomial::var(&ring, len + i));
    }
    let alg = Algebra::new(&ring, vec![rel])?;
    let v = alg.vars();
    let row = UnimodularRow::new(&alg, v[..len].to_vec())?;
    let split = SplittingRow::new(&row, v[len..].to_vec())?;
    Ok((row, split))
}
