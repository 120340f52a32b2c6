use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{same_algebra, Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

use super::word::ElementaryWord;
use super::{check_unimodular, UnimodularRow};

/// Parameters of the step-one search for `λ, μ` making the tails unimodular.
#[derive(Clone, Debug)]
pub struct ShrinkConfig {
    /// Candidates per slot.
    pub budget: usize,
    pub seed: u64,
    /// `λ_2..λ_n` followed by `μ_2..μ_n`, tried before the search.
    pub hints: Option<Vec<AlgebraElement>>,
}

impl Default for ShrinkConfig {
    fn default() -> Self {
        ShrinkConfig {
            budget: 200,
            seed: 0,
            hints: None,
        }
    }
}

/// Output of the Mennicke–Newman procedure: `u·eu = (x, a_2..a_n)` and `v·ev = (1−x, a_2..a_n)`.
#[derive(Clone, Debug)]
pub struct MennickeNewman {
    pub x: AlgebraElement,
    /// `a_2, ..., a_n`.
    pub a: Vec<AlgebraElement>,
    pub eu: ElementaryWord,
    pub ev: ElementaryWord,
    /// `λ_2..λ_n, μ_2..μ_n` when step one was needed.
    pub shrink: Option<Vec<AlgebraElement>>,
    /// Rows after step one.
    pub u1: Vec<AlgebraElement>,
    pub v1: Vec<AlgebraElement>,
    /// Rows after step two, whose first entries sum to one.
    pub u2: Vec<AlgebraElement>,
    pub v2: Vec<AlgebraElement>,
    /// Coefficients of `u_1 + v_1 − 1` on `u_2..u_n` and `v_2..v_n`.
    pub alpha: Vec<AlgebraElement>,
    pub beta: Vec<AlgebraElement>,
}

fn tail(u: &[AlgebraElement], v: &[AlgebraElement]) -> Vec<AlgebraElement> {
    u[1..].iter().chain(&v[1..]).cloned().collect()
}

/// Candidate coefficients in search order: 0, 1, −1, the generators, then seeded random
/// polynomials of degree at most 2.
fn candidates(parent: &Arc<Algebra>, budget: usize, rng: &mut ChaCha8Rng) -> Vec<AlgebraElement> {
    let mut out = vec![parent.zero(), parent.one(), parent.from_i64(-1)];
    out.extend(parent.vars());
    let ring = parent.ring();
    let nv = ring.nvars();
    let mut attempts = 0;
    while out.len() < budget && attempts < budget * 10 {
        attempts += 1;
        let nterms = rng.gen_range(1..=3);
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let mut e = vec![0u32; nv];
            if nv > 0 {
                for _ in 0..rng.gen_range(0..=2) {
                    e[rng.gen_range(0..nv)] += 1;
                }
            }
            let c = rng.gen_range(-3i64..=3);
            terms.push((Monomial::from_exponents(e), ring.field().from_i64(c)));
        }
        let cand = parent
            .element(&Polynomial::from_terms(ring, terms))
            .expect("same ring");
        if !out.contains(&cand) {
            out.push(cand);
        }
    }
    out.truncate(budget.max(1));
    out
}

/// Step one: shifts `u_i += λ_i·u_1·v_1` and `v_i += μ_i·u_1·v_1` until the tail is unimodular.
fn shrink(
    parent: &Arc<Algebra>,
    u: &[AlgebraElement],
    v: &[AlgebraElement],
    cfg: &ShrinkConfig,
) -> Result<Vec<AlgebraElement>> {
    let n = u.len();
    let uv = &u[0] * &v[0];
    let shifted = |coeffs: &[AlgebraElement]| -> Vec<AlgebraElement> {
        let mut t = Vec::with_capacity(2 * n - 2);
        for (k, ui) in u[1..].iter().enumerate() {
            t.push(ui + &(&coeffs[k] * &uv));
        }
        for (k, vi) in v[1..].iter().enumerate() {
            t.push(vi + &(&coeffs[n - 1 + k] * &uv));
        }
        t
    };
    let works = |coeffs: &[AlgebraElement]| -> Result<bool> {
        parent.generates_unit_ideal(&shifted(coeffs))
    };

    if let Some(h) = &cfg.hints {
        if h.len() != 2 * n - 2 {
            return Err(Error::ShapeError(format!(
                "expected {} shrink hints, got {}",
                2 * n - 2,
                h.len()
            )));
        }
        if works(h)? {
            return Ok(h.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cands = candidates(parent, cfg.budget, &mut rng);
    // Uniform assignments first, skipping the all-zero one already known to fail.
    for c in cands.iter().skip(1) {
        let coeffs = vec![c.clone(); 2 * n - 2];
        if works(&coeffs)? {
            return Ok(coeffs);
        }
    }
    for _ in 0..cfg.budget {
        let coeffs: Vec<AlgebraElement> = (0..2 * n - 2)
            .map(|_| cands[rng.gen_range(0..cands.len())].clone())
            .collect();
        if works(&coeffs)? {
            return Ok(coeffs);
        }
    }
    Err(Error::ShrinkFailed { budget: cfg.budget })
}

/// The constructive Mennicke–Newman procedure on two unimodular rows of the same length.
pub fn mennicke_newman(
    u: &UnimodularRow,
    v: &UnimodularRow,
    cfg: &ShrinkConfig,
) -> Result<MennickeNewman> {
    if u.len() != v.len() {
        return Err(Error::ShapeError(format!(
            "rows of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    if !same_algebra(u.parent(), v.parent()) {
        return Err(Error::RingMismatch);
    }
    if !u.is_verified() || !v.is_verified() {
        return Err(Error::NotUnimodular);
    }
    let parent = u.parent().clone();
    let n = u.len();
    let mut eu = ElementaryWord::empty(n);
    let mut ev = ElementaryWord::empty(n);
    let mut uu = u.entries().to_vec();
    let mut vv = v.entries().to_vec();

    let shrink_coeffs = if parent.generates_unit_ideal(&tail(&uu, &vv))? {
        None
    } else {
        let coeffs = shrink(&parent, &uu, &vv, cfg)?;
        for i in 1..n {
            eu.add(0, i, &coeffs[i - 1] * &vv[0])?;
            ev.add(0, i, &coeffs[n - 2 + i] * &uu[0])?;
        }
        uu = u.with_entries(uu).apply(&eu)?.into_entries();
        vv = v.with_entries(vv).apply(&ev)?.into_entries();
        Some(coeffs)
    };
    let (u1, v1) = (uu.clone(), vv.clone());

    // Step two: make the first entries sum to one.
    let target = &(&uu[0] + &vv[0]) - &parent.one();
    let coeffs = parent.lift(&target, &tail(&uu, &vv)).map_err(|e| match e {
        Error::NotInIdeal => Error::NotUnimodular,
        other => other,
    })?;
    let (alpha, beta) = coeffs.split_at(n - 1);
    let mut step2_u = ElementaryWord::empty(n);
    let mut step2_v = ElementaryWord::empty(n);
    for i in 1..n {
        step2_u.add(i, 0, -&alpha[i - 1])?;
        step2_v.add(i, 0, -&beta[i - 1])?;
    }
    uu = step2_u.apply(&uu)?;
    vv = step2_v.apply(&vv)?;
    eu.extend(&step2_u)?;
    ev.extend(&step2_v)?;
    debug_assert!((&(&uu[0] + &vv[0]) - &parent.one()).is_zero());

    // Cross adjustments to the common tail a_i = u_i − u_1(u_i − v_i) = v_i + v_1(u_i − v_i).
    let mut cross_u = ElementaryWord::empty(n);
    let mut cross_v = ElementaryWord::empty(n);
    for i in 1..n {
        let d = &uu[i] - &vv[i];
        cross_u.add(0, i, -&d)?;
        cross_v.add(0, i, d)?;
    }
    let fu = cross_u.apply(&uu)?;
    let fv = cross_v.apply(&vv)?;
    eu.extend(&cross_u)?;
    ev.extend(&cross_v)?;
    if fu[1..] != fv[1..] || !(&fu[0] + &fv[0]).is_one() {
        return Err(Error::CertificateAssemblyFailed {
            stage: "mennicke-newman tails".into(),
        });
    }
    Ok(MennickeNewman {
        x: fu[0].clone(),
        a: fu[1..].to_vec(),
        eu,
        ev,
        shrink: shrink_coeffs,
        u1,
        v1,
        u2: uu,
        v2: vv,
        alpha: alpha.to_vec(),
        beta: beta.to_vec(),
    })
}

/// Result of van der Kallen's addition.
#[derive(Clone, Debug)]
pub struct VdkSum {
    pub sum: UnimodularRow,
    pub mn: MennickeNewman,
    /// Advisory notes, e.g. when the dimension hypothesis could not be confirmed.
    pub warnings: Vec<String>,
}

/// `[u] + [v] = [x(1−x), a_2, ..., a_n]`.
pub fn vdk_add(u: &UnimodularRow, v: &UnimodularRow, cfg: &ShrinkConfig) -> Result<VdkSum> {
    let mn = mennicke_newman(u, v, cfg)?;
    let parent = u.parent();
    let n = u.len();
    let mut warnings = Vec::new();
    match parent.relations().krull_dimension() {
        Ok(d) if d + 4 <= 2 * n => {}
        Ok(d) => warnings.push(format!(
            "Krull dimension {d} exceeds 2n-4 = {}; the sum is computed but the group law is not guaranteed",
            (2 * n).saturating_sub(4)
        )),
        Err(e) => warnings.push(format!("could not bound the dimension: {e}")),
    }
    let first = &mn.x * &(&parent.one() - &mn.x);
    let mut entries = vec![first];
    entries.extend(mn.a.iter().cloned());
    let sum = check_unimodular(parent, entries)?;
    Ok(VdkSum { sum, mn, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_algebra;
    use crate::arith::FieldConfig;

    #[test]
    fn rational_pair() {
        let q = make_algebra::<&str>(FieldConfig::Rationals, &[], &[]).unwrap();
        let u = UnimodularRow::parse(&q, &["2", "3"]).unwrap();
        let v = UnimodularRow::parse(&q, &["5", "7"]).unwrap();
        let mn = mennicke_newman(&u, &v, &ShrinkConfig::default()).unwrap();
        assert!(mn.shrink.is_none());
        let mut left = vec![mn.x.clone()];
        left.extend(mn.a.iter().cloned());
        assert_eq!(u.apply(&mn.eu).unwrap().entries(), left.as_slice());
        let s = vdk_add(&u, &v, &ShrinkConfig::default()).unwrap();
        assert!(s.sum.is_verified());
    }

    #[test]
    fn shrink_needed() {
        let q = make_algebra::<&str>(FieldConfig::Rationals, &[], &[]).unwrap();
        let u = UnimodularRow::parse(&q, &["1", "0"]).unwrap();
        let mn = mennicke_newman(&u, &u, &ShrinkConfig::default()).unwrap();
        assert_eq!(mn.shrink.as_deref(), Some(&[q.one(), q.one()][..]));
        assert!((&mn.x + &u.apply(&mn.ev).unwrap().entries()[0]).is_one());
    }
}
