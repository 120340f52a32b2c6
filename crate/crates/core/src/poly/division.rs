use std::sync::Arc;

use crate::arith::Scalar;
use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::PolyRing;

/// Result of multivariate division: `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Index of the first divisor whose leading monomial divides `m`.
fn find_divisor(m: &Monomial, leads: &[(Monomial, Scalar)]) -> Option<usize> {
    leads.iter().position(|(lm, _)| lm.divides(m))
}

/// Divides `f` by `divisors`, all in `ring`, always picking the first eligible divisor.
///
/// When `track` is false the quotient vector is left empty.
pub(crate) fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    track: bool,
) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring().clone();
    let leads: Vec<(Monomial, Scalar)> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term().expect("nonzero divisor");
            (m.clone(), c.inverse().expect("nonzero leading coefficient"))
        })
        .collect();
    let mut quotient_terms: Vec<Vec<(Monomial, Scalar)>> = if track {
        vec![Vec::new(); divisors.len()]
    } else {
        Vec::new()
    };
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        match find_divisor(&m, &leads) {
            Some(i) => {
                let (lm, lc_inv) = &leads[i];
                let q = lm.quotient_of(&m).expect("divisible");
                let coef = &c * lc_inv;
                p = p.sub_mul_term(&coef, &q, &divisors[i]);
                if track {
                    quotient_terms[i].push((q, coef));
                }
            }
            None => {
                rem.push(p.pop_leading().expect("nonzero"));
            }
        }
    }
    let quotients = quotient_terms
        .into_iter()
        .map(|ts| Polynomial::from_terms(&ring, ts))
        .collect();
    (quotients, Polynomial::from_sorted_terms(&ring, rem))
}

pub(crate) fn ring_for(base: &Arc<PolyRing>, order: &MonomialOrder) -> Result<Arc<PolyRing>> {
    if base.order() == order {
        Ok(base.clone())
    } else {
        base.reordered(order.clone())
    }
}

/// Multivariate division of `f` by an ordered list of divisors under `order`.
pub fn divide_with_remainder(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Division> {
    let ring = ring_for(f.ring(), order)?;
    let mut ds = Vec::with_capacity(divisors.len());
    for (i, d) in divisors.iter().enumerate() {
        if !d.ring().same_variables(&ring) {
            return Err(Error::RingMismatch);
        }
        if d.is_zero() {
            return Err(Error::InvalidDivisor(i));
        }
        ds.push(d.in_ring(&ring));
    }
    let (quotients, remainder) = reduce(&f.in_ring(&ring), &ds, true);
    Ok(Division {
        quotients,
        remainder,
    })
}
