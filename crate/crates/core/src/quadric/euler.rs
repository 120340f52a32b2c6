use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraElement, RingHom};
use crate::arith::FieldConfig;
use crate::error::{Error, Result};
use crate::poly::Ideal;
use crate::rows::{compute_splitting, SplittingRow, UnimodularRow};

use super::maps::{degree_action, eta_hom, evaluate_lambda, mu_hom};
use super::{build_q_odd, jouanolou_lift, segre_point, QuadricEvenPoint};

/// `δ(a, b, s) = (2a, 1 − 2s)` with splitting `(2b, 1 − 2s)`.
pub fn delta_map(point: &QuadricEvenPoint) -> Result<(UnimodularRow, SplittingRow)> {
    let parent = point.parent();
    if parent.field().characteristic() == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let two = parent.from_i64(2);
    let last = &parent.one() - &(&two * &point.z);
    let mut row: Vec<AlgebraElement> = point.x.iter().map(|a| &two * a).collect();
    row.push(last.clone());
    let mut split: Vec<AlgebraElement> = point.y.iter().map(|b| &two * b).collect();
    split.push(last);
    let row = UnimodularRow::unchecked(parent, row)?;
    // The pairing check inside the splitting constructor certifies unimodularity.
    let split = SplittingRow::new(&row, split)?;
    let row = row.reverify()?;
    Ok((row, split))
}

/// `⟨2^d⟩ ∘ μ_d(−1)` as a map `k[Q_{2d+1}] → k[Q_{2d}]`; expected `(2a, 1 − 2s, 2b, 1 − 2s)`.
pub fn degree_after_mu_minus_one(d: usize, field: FieldConfig) -> Result<RingHom> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let mu_m1 = evaluate_lambda(&mu_hom(d, field)?, &field.from_i64(-1))?;
    mu_m1.compose(&degree_action(&field.from_i64(2), d, field)?)
}

/// An ideal `I` with generators lifting an orientation `ω_I: (A/I)^n → I/I²`.
#[derive(Clone, Debug)]
pub struct OrientedIdeal {
    parent: Arc<Algebra>,
    generators: Vec<AlgebraElement>,
    ideal: Ideal,
    height_checked: bool,
}

impl OrientedIdeal {
    /// `ideal_gens` generate `I`; `generators` must generate `I` modulo `I²`.
    pub fn new(
        parent: &Arc<Algebra>,
        ideal_gens: &[AlgebraElement],
        generators: Vec<AlgebraElement>,
        check_height: bool,
    ) -> Result<Self> {
        let mut with_squares = generators.clone();
        for (k, a) in ideal_gens.iter().enumerate() {
            for b in &ideal_gens[k..] {
                with_squares.push(a * b);
            }
        }
        if !parent.ideals_equal(&with_squares, ideal_gens)? {
            return Err(Error::BadCertificate(
                "orientation generators do not generate I/I²".into(),
            ));
        }
        let ideal = parent.ideal_of(ideal_gens)?;
        if check_height {
            let n = generators.len();
            let dim_a = parent.relations().krull_dimension()?;
            let dim_q = ideal.krull_dimension()?;
            let found = dim_a.saturating_sub(dim_q);
            if found != n {
                return Err(Error::HeightMismatch { expected: n, found });
            }
        }
        Ok(OrientedIdeal {
            parent: parent.clone(),
            generators,
            ideal,
            height_checked: check_height,
        })
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn generators(&self) -> &[AlgebraElement] {
        &self.generators
    }

    /// `I` in the ambient polynomial ring, relations included.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn height_checked(&self) -> bool {
        self.height_checked
    }
}

#[derive(Clone, Debug)]
pub struct PhiResult {
    pub oriented: OrientedIdeal,
    pub point: QuadricEvenPoint,
    pub splitting: SplittingRow,
}

/// `φ(a_1, …, a_{d+1}) = (J_0, a_{d+1}·ω_0)` with `J_0 = ⟨a_1, …, a_d⟩`, oriented by
/// `(a_1, …, a_{d−1}, a_d a_{d+1})`, together with its `Q_{2d}` point.
pub fn phi_map(row: &UnimodularRow, check_height: bool) -> Result<PhiResult> {
    let a = row.entries();
    let d = a.len() - 1;
    let parent = row.parent();
    let splitting = compute_splitting(row)?;
    let point = segre_point(row, &splitting)?;
    let oriented = OrientedIdeal::new(parent, &a[..d], point.x.clone(), check_height)?;
    let mut point_gens = point.x.clone();
    point_gens.push(point.z.clone());
    if !oriented.ideal.equals(&parent.ideal_of(&point_gens)?)? {
        return Err(Error::BadCertificate(
            "the point's ideal ⟨x, z⟩ differs from J_0".into(),
        ));
    }
    Ok(PhiResult {
        oriented,
        point,
        splitting,
    })
}

/// Whether `φ`'s point equals `η_d` applied to the Jouanolou lift of the row.
pub fn phi_matches_eta(row: &UnimodularRow) -> Result<bool> {
    let d = row.len() - 1;
    let field = row.parent().field();
    let phi = phi_map(row, false)?;
    let lift = jouanolou_lift(row)?;
    let odd = build_q_odd(d, field)?;
    let composite = lift.to_hom(&odd)?.compose(&eta_hom(d, field)?)?;
    let mut expected = phi.point.x.clone();
    expected.extend(phi.point.y.iter().cloned());
    expected.push(phi.point.z.clone());
    Ok(composite.images() == expected.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadric::{build_q_even, universal_row};

    #[test]
    fn delta_on_the_universal_point() {
        let q = build_q_even(2, FieldConfig::Rationals).unwrap();
        let p = QuadricEvenPoint::generic(&q).unwrap();
        let (row, split) = delta_map(&p).unwrap();
        assert!(row.is_verified());
        assert!(split.pairing().is_one());
        let q2 = build_q_even(1, FieldConfig::PrimeField(2)).unwrap();
        let p2 = QuadricEvenPoint::generic(&q2).unwrap();
        assert_eq!(
            delta_map(&p2).unwrap_err(),
            Error::CharacteristicTwoUnsupported
        );
    }

    #[test]
    fn degree_composite() {
        let h = degree_after_mu_minus_one(2, FieldConfig::Rationals).unwrap();
        let shown: Vec<String> = h.images().iter().map(|e| e.to_string()).collect();
        assert_eq!(
            shown,
            ["2*x1", "2*x2", "-2*z + 1", "2*y1", "2*y2", "-2*z + 1"]
        );
    }

    #[test]
    fn phi_universal() {
        let (row, _) = universal_row(3, FieldConfig::Rationals).unwrap();
        let phi = phi_map(&row, false).unwrap();
        assert!(phi.point.defect().is_zero());
        assert!(phi_matches_eta(&row).unwrap());
    }
}
