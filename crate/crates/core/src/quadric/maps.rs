use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraElement, RingHom};
use crate::arith::{FieldConfig, Scalar};
use crate::error::{Error, Result};

use super::{build_q_even, build_q_odd, Quadric};

/// `k[𝔾_m × Q_{2n}] = k[Q_{2n}][t, t_inv] / ⟨t·t_inv − 1⟩`.
#[derive(Clone, Debug)]
pub struct GmQuadricRing {
    n: usize,
    quadric: Quadric,
    algebra: Arc<Algebra>,
}

impl GmQuadricRing {
    pub fn new(n: usize, field: FieldConfig) -> Result<Self> {
        let quadric = build_q_even(n, field)?;
        let algebra = quadric.algebra().adjoin_unit_variable("t")?;
        Ok(GmQuadricRing {
            n,
            quadric,
            algebra,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quadric(&self) -> &Quadric {
        &self.quadric
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn t(&self) -> AlgebraElement {
        self.algebra.var_at(2 * self.n + 1)
    }

    pub fn t_inv(&self) -> AlgebraElement {
        self.algebra.var_at(2 * self.n + 2)
    }

    pub fn x(&self, i: usize) -> AlgebraElement {
        self.algebra.var_at(i)
    }

    pub fn y(&self, i: usize) -> AlgebraElement {
        self.algebra.var_at(self.n + i)
    }

    pub fn z(&self) -> AlgebraElement {
        self.algebra.var_at(2 * self.n)
    }

    /// The specialization `t ↦ λ` as a map `k[𝔾_m × Q_{2n}] → k[Q_{2n}]`.
    pub fn specialize(&self, lambda: &Scalar) -> Result<RingHom> {
        let inv = lambda.inverse().map_err(|_| Error::InvalidUnit)?;
        let q = self.quadric.algebra();
        let mut images = q.vars();
        images.push(q.constant(lambda.clone()));
        images.push(q.constant(inv));
        RingHom::new(&self.algebra, q, images)
    }
}

/// `a(t, z) = (1 − z) + t·z`.
pub fn a_of(t: &AlgebraElement, z: &AlgebraElement) -> AlgebraElement {
    let one = z.parent().one();
    &(&one - z) + &(t * z)
}

/// `b(t) = 2 − t − t⁻¹`.
pub fn b_of(t: &AlgebraElement, t_inv: &AlgebraElement) -> AlgebraElement {
    &(&t.parent().from_i64(2) - t) - t_inv
}

/// `η_n: Q_{2n+1} → Q_{2n}` as `k[Q_{2n}] → k[Q_{2n+1}]`:
/// `(x_1, …, x_{n−1}, x_n x_{n+1}, y_1 x_{n+1} y_{n+1}, …, y_{n−1} x_{n+1} y_{n+1}, y_n y_{n+1}, Σ_{i≤n} x_i y_i)`.
pub fn eta_hom(n: usize, field: FieldConfig) -> Result<RingHom> {
    if n < 1 {
        return Err(Error::ShapeError("eta needs n >= 1".into()));
    }
    let even = build_q_even(n, field)?;
    let odd = build_q_odd(n, field)?;
    let a = odd.algebra();
    let x = |i: usize| a.var_at(i);
    let y = |i: usize| a.var_at(n + 1 + i);
    let w = &x(n) * &y(n);
    let mut images: Vec<AlgebraElement> = (0..n - 1).map(x).collect();
    images.push(&x(n - 1) * &x(n));
    images.extend((0..n - 1).map(|i| &y(i) * &w));
    images.push(&y(n - 1) * &y(n));
    images.push((0..n).fold(a.zero(), |acc, i| &acc + &(&x(i) * &y(i))));
    RingHom::new(even.algebra(), a, images)
}

/// `μ_n: 𝔾_m × Q_{2n} → Q_{2n+1}`, `(t, (x, y, z)) ↦ (x, a(t, z), b(t)·y, a(t⁻¹, z))`.
pub fn mu_hom(n: usize, field: FieldConfig) -> Result<RingHom> {
    let gm = GmQuadricRing::new(n, field)?;
    let odd = build_q_odd(n, field)?;
    let (t, ti, z) = (gm.t(), gm.t_inv(), gm.z());
    let b = b_of(&t, &ti);
    let mut images: Vec<AlgebraElement> = (0..n).map(|i| gm.x(i)).collect();
    images.push(a_of(&t, &z));
    images.extend((0..n).map(|i| &b * &gm.y(i)));
    images.push(a_of(&ti, &z));
    RingHom::new(odd.algebra(), gm.algebra(), images)
}

/// Whether `a(t, z)·a(t⁻¹, z) + b(t)·Σ x_i y_i − 1` vanishes in `k[𝔾_m × Q_{2n}]`.
pub fn mu_ab_identity(n: usize, field: FieldConfig) -> Result<bool> {
    let gm = GmQuadricRing::new(n, field)?;
    let (t, ti, z) = (gm.t(), gm.t_inv(), gm.z());
    let s = (0..n).fold(gm.algebra().zero(), |acc, i| &acc + &(&gm.x(i) * &gm.y(i)));
    let lhs = &(&a_of(&t, &z) * &a_of(&ti, &z)) + &(&b_of(&t, &ti) * &s);
    Ok(lhs.is_one())
}

/// The endomorphism `E` of `k[Q_{2n+1}]`: `x_i ↦ x_i − x_i x_{n+1}` for `i ≤ n`,
/// `y_{n+1} ↦ y_{n+1} + 1 − x_{n+1} y_{n+1}`, everything else fixed.
pub fn e_endo(n: usize, field: FieldConfig) -> Result<RingHom> {
    let odd = build_q_odd(n, field)?;
    let a = odd.algebra();
    let v = a.vars();
    let (xl, yl) = (&v[n], &v[2 * n + 1]);
    let mut images = v.clone();
    for img in images.iter_mut().take(n) {
        *img = &*img - &(&*img * xl);
    }
    images[2 * n + 1] = &(yl + &a.one()) - &(xl * yl);
    RingHom::new(a, a, images)
}

/// `μ′_n = E ∘ μ_n`, computed as a composite of pullbacks.
pub fn mu_prime_hom(n: usize, field: FieldConfig) -> Result<RingHom> {
    mu_hom(n, field)?.compose(&e_endo(n, field)?)
}

/// The closed formula `(x·z(1 − t), a(t, z), b(t)·y, a(t⁻¹, z)·z(1 − t) + 1)` for `μ′_n`.
pub fn mu_prime_formula(n: usize, field: FieldConfig) -> Result<RingHom> {
    let gm = GmQuadricRing::new(n, field)?;
    let odd = build_q_odd(n, field)?;
    let (t, ti, z) = (gm.t(), gm.t_inv(), gm.z());
    let one = gm.algebra().one();
    let zt = &z * &(&one - &t);
    let b = b_of(&t, &ti);
    let mut images: Vec<AlgebraElement> = (0..n).map(|i| &gm.x(i) * &zt).collect();
    images.push(a_of(&t, &z));
    images.extend((0..n).map(|i| &b * &gm.y(i)));
    images.push(&(&a_of(&ti, &z) * &zt) + &one);
    RingHom::new(odd.algebra(), gm.algebra(), images)
}

/// Whether `μ′_n(t, base point)` is the base point of `Q_{2n+1}` for symbolic `t`.
pub fn mu_prime_basepoint_check(n: usize, field: FieldConfig) -> Result<bool> {
    let mu_prime = mu_prime_hom(n, field)?;
    let gm = GmQuadricRing::new(n, field)?;
    let g = Algebra::polynomial_ring(&crate::poly::PolyRing::new(field, ["t", "t_inv"])?);
    let g = g.quotient([crate::poly::parse_polynomial(g.ring(), "t*t_inv - 1")?])?;
    let mut images = vec![g.zero(); 2 * n + 1];
    images.push(g.var_at(0));
    images.push(g.var_at(1));
    let at_base = RingHom::new(gm.algebra(), &g, images)?;
    let composite = at_base.compose(&mu_prime)?;
    let odd = build_q_odd(n, field)?;
    let expected: Vec<AlgebraElement> = odd
        .base_point()
        .iter()
        .map(|c| g.constant(c.clone()))
        .collect();
    Ok(composite.images() == expected.as_slice())
}

/// Specializes a map into `k[𝔾_m × Q_{2n}]` at `t = λ`.
pub fn evaluate_lambda(h: &RingHom, lambda: &Scalar) -> Result<RingHom> {
    let target = h.target();
    let nv = target.nvars();
    if nv < 5 || target.names()[nv - 2] != "t" || target.names()[nv - 1] != "t_inv" {
        return Err(Error::ShapeError(
            "map does not land in k[Gm x Q_2n]".into(),
        ));
    }
    let gm = GmQuadricRing::new((nv - 3) / 2, target.field())?;
    gm.specialize(lambda)?.compose(h)
}

/// `⟨α^n⟩` on `Q_{2n+1}`: `x_i ↦ α x_i`, `y_i ↦ α⁻¹ y_i` for `i ≤ n`; `x_{n+1}, y_{n+1}` fixed.
pub fn degree_action(alpha: &Scalar, n: usize, field: FieldConfig) -> Result<RingHom> {
    if alpha.field() != field {
        return Err(Error::FieldMismatch);
    }
    let inv = alpha.inverse().map_err(|_| Error::InvalidUnit)?;
    let odd = build_q_odd(n, field)?;
    let a = odd.algebra();
    let mut images = a.vars();
    for i in 0..n {
        images[i] = images[i].scale(alpha);
        images[n + 1 + i] = images[n + 1 + i].scale(&inv);
    }
    RingHom::new(a, a, images)
}

/// `I_X = η*(⟨X_1, …, X_n, Z⟩) = ⟨x_1, …, x_{n−1}, x_n x_{n+1}, z⟩` equals `⟨x_1, …, x_n⟩` in
/// `k[Q_{2n+1}]`.
pub fn eta_ideal_equality(n: usize, field: FieldConfig) -> Result<bool> {
    let eta = eta_hom(n, field)?;
    let a = eta.target();
    let mut pulled: Vec<AlgebraElement> = eta.images()[..n].to_vec();
    pulled.push(eta.images()[2 * n].clone());
    let xs: Vec<AlgebraElement> = (0..n).map(|i| a.var_at(i)).collect();
    a.ideals_equal(&pulled, &xs)
}

/// The inverse of `x_{n+1}` in `k[Q_{2n+1}] / ⟨x_1, …, x_n⟩`, when it is a unit.
pub fn x_last_inverse_mod_ix(n: usize, field: FieldConfig) -> Result<Option<AlgebraElement>> {
    let odd = build_q_odd(n, field)?;
    let ring = odd.algebra().ring().clone();
    let xs = (0..n).map(|i| crate::poly::Polynomial::var(&ring, i));
    let quotient = odd.algebra().quotient(xs)?;
    Ok(quotient.var_at(n).inverse())
}
