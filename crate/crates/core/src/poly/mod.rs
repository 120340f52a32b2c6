//! Sparse multivariate polynomials over an exact field, monomial orders, division and
//! Gröbner bases with cofactor tracking.

mod division;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use division::{divide_with_remainder, Division};
pub use groebner::GroebnerBasis;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{PolyOp, Polynomial};
pub use ring::PolyRing;

pub(crate) use ring::same_ring;

use crate::error::Result;

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    ideal.groebner_with(order)
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Coefficients expressing `f` in the generators of `ideal`.
pub fn bezout_lift(f: &Polynomial, ideal: &Ideal) -> Result<Vec<Polynomial>> {
    ideal.lift(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    ideal.krull_dimension()
}
