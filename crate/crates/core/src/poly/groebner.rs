use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::arith::Scalar;
use crate::error::{Error, Result};

use super::division::{reduce, ring_for};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::PolyRing;

/// Reduced Gröbner basis together with the cofactor matrix expressing every basis element
/// in terms of the original generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    cofactors: Vec<Vec<Polynomial>>,
}

/// A polynomial with its cofactor row.
#[derive(Clone)]
struct Tracked {
    poly: Polynomial,
    cof: Vec<Polynomial>,
}

impl Tracked {
    fn scale(&self, c: &Scalar) -> Tracked {
        Tracked {
            poly: self.poly.scale(c),
            cof: self.cof.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Scalar) -> Tracked {
        Tracked {
            poly: self.poly.mul_term(m, c),
            cof: self.cof.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    fn sub(&self, other: &Tracked) -> Tracked {
        Tracked {
            poly: &self.poly - &other.poly,
            cof: self
                .cof
                .iter()
                .zip(&other.cof)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Fully reduces `f` by `basis`, carrying the cofactors along.
fn reduce_tracked(f: &Tracked, basis: &[Tracked]) -> Tracked {
    if basis.is_empty() || f.poly.is_zero() {
        return f.clone();
    }
    let divisors: Vec<Polynomial> = basis.iter().map(|t| t.poly.clone()).collect();
    let (quotients, remainder) = reduce(&f.poly, &divisors, true);
    let mut cof = f.cof.clone();
    for (q, b) in quotients.iter().zip(basis) {
        if q.is_zero() {
            continue;
        }
        for (c, bc) in cof.iter_mut().zip(&b.cof) {
            if !bc.is_zero() {
                *c = &*c - &(q * bc);
            }
        }
    }
    Tracked {
        poly: remainder,
        cof,
    }
}

fn s_polynomial(a: &Tracked, b: &Tracked) -> Tracked {
    let (ma, ca) = a.poly.leading_term().expect("nonzero");
    let (mb, cb) = b.poly.leading_term().expect("nonzero");
    let l = ma.lcm(mb);
    let ta = a.mul_term(
        &ma.quotient_of(&l).expect("lcm"),
        &ca.inverse().expect("nonzero"),
    );
    let tb = b.mul_term(
        &mb.quotient_of(&l).expect("lcm"),
        &cb.inverse().expect("nonzero"),
    );
    ta.sub(&tb)
}

fn unit_row(ring: &Arc<PolyRing>, len: usize, at: usize, c: Scalar) -> Vec<Polynomial> {
    (0..len)
        .map(|k| {
            if k == at {
                Polynomial::constant(ring, c.clone())
            } else {
                Polynomial::zero(ring)
            }
        })
        .collect()
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on `generators` under `order`.
    ///
    /// Zero generators are ignored but keep their column in the cofactor matrix.
    pub fn compute(
        generators: &[Polynomial],
        ring: &Arc<PolyRing>,
        order: &MonomialOrder,
    ) -> Result<Self> {
        let work = ring_for(ring, order)?;
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.ring().same_variables(ring) {
                return Err(Error::RingMismatch);
            }
            gens.push(g.in_ring(&work));
        }
        let m = gens.len();

        // A nonzero constant generator makes the ideal the whole ring.
        if let Some(i) = gens.iter().position(|g| !g.is_zero() && g.is_constant()) {
            let c = gens[i].as_constant().expect("constant");
            let cof = unit_row(&work, m, i, c.inverse()?);
            return Ok(GroebnerBasis {
                ring: work.clone(),
                generators: gens,
                basis: vec![Polynomial::one(&work)],
                cofactors: vec![cof],
            });
        }

        let mut g: Vec<Tracked> = Vec::new();
        for (i, p) in gens.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            g.push(Tracked {
                poly: p.clone(),
                cof: unit_row(&work, m, i, work.field().one()),
            });
        }
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
        for j in 0..g.len() {
            for i in 0..j {
                pending.insert((i, j));
            }
        }
        let mut unit: Option<Tracked> = None;

        while unit.is_none() {
            let Some(&(i, j)) = pending.iter().min_by(|a, b| {
                let la = pair_lcm(&g, a.0, a.1);
                let lb = pair_lcm(&g, b.0, b.1);
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            }) else {
                break;
            };
            pending.remove(&(i, j));
            let (li, lj) = (lm(&g[i]), lm(&g[j]));
            if li.is_coprime(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && lm(&g[k]).divides(&l)
                    && !pending.contains(&ordered(i, k))
                    && !pending.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            let r = reduce_tracked(&s_polynomial(&g[i], &g[j]), &g);
            if r.poly.is_zero() {
                continue;
            }
            if r.poly.is_constant() {
                unit = Some(r);
                break;
            }
            let n = g.len();
            g.push(r);
            for k in 0..n {
                pending.insert((k, n));
            }
        }

        if let Some(r) = unit {
            let c = r.poly.as_constant().expect("constant");
            let t = r.scale(&c.inverse()?);
            return Ok(GroebnerBasis {
                ring: work.clone(),
                generators: gens,
                basis: vec![t.poly],
                cofactors: vec![t.cof],
            });
        }

        // Minimal basis: drop elements whose leading monomial is divisible by another's.
        let keep: Vec<bool> = (0..g.len())
            .map(|i| {
                !(0..g.len()).any(|k| {
                    k != i && lm(&g[k]).divides(lm(&g[i])) && (lm(&g[k]) != lm(&g[i]) || k < i)
                })
            })
            .collect();
        let mut min: Vec<Tracked> = g
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(t, _)| t)
            .collect();

        // Interreduce and normalize.
        for i in 0..min.len() {
            let others: Vec<Tracked> = min
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, t)| t.clone())
                .collect();
            let r = reduce_tracked(&min[i], &others);
            let c = r
                .poly
                .leading_coeff()
                .expect("leading term survives")
                .inverse()?;
            min[i] = r.scale(&c);
        }
        min.sort_by(|a, b| order.cmp(lm(a), lm(b)));
        let (basis, cofactors) = min.into_iter().map(|t| (t.poly, t.cof)).unzip();
        Ok(GroebnerBasis {
            ring: work,
            generators: gens,
            basis,
            cofactors,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// `cofactors()[j][i]` is the coefficient of generator `i` in basis element `j`.
    pub fn cofactors(&self) -> &[Vec<Polynomial>] {
        &self.cofactors
    }

    pub fn is_whole_ring(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    fn import(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(f.in_ring(&self.ring))
    }

    /// Canonical representative of `f` modulo the ideal, returned in `f`'s ring.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let g = self.import(f)?;
        if self.basis.is_empty() {
            return Ok(f.clone());
        }
        let (_, r) = reduce(&g, &self.basis, false);
        Ok(r.in_ring(f.ring()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Coefficients `c` with `f = Σ c_i·generators[i]`, in `f`'s ring.
    pub fn lift(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let g = self.import(f)?;
        let m = self.generators.len();
        let mut out = vec![Polynomial::zero(&self.ring); m];
        if g.is_zero() {
            return Ok(out.into_iter().map(|p| p.in_ring(f.ring())).collect());
        }
        if self.basis.is_empty() {
            return Err(Error::NotInIdeal);
        }
        let (quotients, r) = reduce(&g, &self.basis, true);
        if !r.is_zero() {
            return Err(Error::NotInIdeal);
        }
        for (q, row) in quotients.iter().zip(&self.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (c, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *c = &*c + &(q * b);
                }
            }
        }
        Ok(out.into_iter().map(|p| p.in_ring(f.ring())).collect())
    }

    /// Expands every cofactor row and compares with the basis element.
    pub fn verify_cofactors(&self) -> bool {
        self.basis.iter().zip(&self.cofactors).all(|(b, row)| {
            let sum = row
                .iter()
                .zip(&self.generators)
                .fold(Polynomial::zero(&self.ring), |acc, (c, g)| &acc + &(c * g));
            &sum == b
        })
    }

    /// Checks the Buchberger criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|j| {
            (0..j).all(|i| {
                let a = Tracked {
                    poly: self.basis[i].clone(),
                    cof: Vec::new(),
                };
                let b = Tracked {
                    poly: self.basis[j].clone(),
                    cof: Vec::new(),
                };
                let s = s_polynomial(&a, &b).poly;
                reduce(&s, &self.basis, false).1.is_zero()
            })
        })
    }

    /// Checks the reducedness conditions: monic, and no term of any element is divisible by
    /// the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, b)| {
            b.leading_coeff().is_some_and(Scalar::is_one)
                && self.basis.iter().enumerate().all(|(k, o)| {
                    k == i
                        || b.terms()
                            .iter()
                            .all(|(m, _)| !o.leading_monomial().expect("nonzero").divides(m))
                })
        })
    }
}

fn lm(t: &Tracked) -> &Monomial {
    t.poly.leading_monomial().expect("nonzero basis element")
}

fn pair_lcm(g: &[Tracked], i: usize, j: usize) -> Monomial {
    lm(&g[i]).lcm(lm(&g[j]))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    match a.cmp(&b) {
        Ordering::Less => (a, b),
        _ => (b, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldConfig;
    use crate::poly::parse_polynomial;

    fn gb(vars: &[&str], gens: &[&str], order: MonomialOrder) -> GroebnerBasis {
        let ring = PolyRing::new(FieldConfig::Rationals, vars.iter().copied()).unwrap();
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_polynomial(&ring, s).unwrap())
            .collect();
        GroebnerBasis::compute(&gens, &ring, &order).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        let b = gb(&["x", "y", "z"], &["x^2-y", "x^3-z"], MonomialOrder::lex(3));
        assert!(b.verify_cofactors());
        assert!(b.s_pairs_reduce_to_zero());
        assert!(b.is_reduced());
        let strs: Vec<String> = b.basis().iter().map(|p| p.to_string()).collect();
        assert!(strs.contains(&"y^3 - z^2".to_string()), "{strs:?}");
    }

    #[test]
    fn constant_generator_short_circuits() {
        let b = gb(&["x"], &["x", "3", "7"], MonomialOrder::grevlex(1));
        assert!(b.is_whole_ring());
        assert_eq!(b.cofactors()[0][1].to_string(), "1/3");
        let six = Polynomial::from_i64(b.ring(), 6);
        let c = b.lift(&six).unwrap();
        assert_eq!(
            c.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["0", "2", "0"]
        );
    }

    #[test]
    fn zero_ideal() {
        let b = gb(&["x"], &["0"], MonomialOrder::grevlex(1));
        assert!(b.is_zero_ideal());
        let x = Polynomial::var(b.ring(), 0);
        assert_eq!(b.normal_form(&x).unwrap(), x);
        assert_eq!(b.lift(&x), Err(Error::NotInIdeal));
    }
}
