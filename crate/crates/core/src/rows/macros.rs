use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra, AlgebraElement};
use crate::error::{Error, Result};

use super::word::{ElementaryGen, ElementaryWord};

/// Named row moves that expand to certified elementary words. Indices are zero-based.
#[derive(Clone, Debug)]
pub enum MoveMacro {
    /// `entry_j += λ·entry_i`.
    Add {
        i: usize,
        j: usize,
        lambda: AlgebraElement,
    },
    /// `(a_i, a_j) ↦ (−a_j, a_i)`.
    SwapSign { i: usize, j: usize },
    /// `(a_i, a_j) ↦ (u·a_i, u⁻¹·a_j)`.
    ScaleUnitPair {
        i: usize,
        j: usize,
        unit: AlgebraElement,
        inverse: AlgebraElement,
    },
    /// `a_i ↦ u·a_i` where `u = 1 + Σ_{j≠i} c_j·row_j` and `row_i = base`; with `inverse` set,
    /// `row_i = u·base` and the move returns it to `base`. Other entries are untouched.
    CongruentUnitScale {
        i: usize,
        base: AlgebraElement,
        unit: AlgebraElement,
        coeffs: Vec<AlgebraElement>,
        row: Vec<AlgebraElement>,
        inverse: bool,
    },
    /// For `u·w = 1 + c·a` with `a` the entry at `pivot`:
    /// `(p, q) ↦ (w·p − a·c·(w·p + q), u·q + a·c·p)` on coordinates `(i, j)`.
    WhiteheadModCoordinate {
        i: usize,
        j: usize,
        pivot: usize,
        pivot_value: AlgebraElement,
        u: AlgebraElement,
        w: AlgebraElement,
        c: AlgebraElement,
    },
}

fn check_indices(n: usize, idx: &[usize]) -> Result<()> {
    for (k, &a) in idx.iter().enumerate() {
        if a >= n {
            return Err(Error::ShapeError(format!(
                "index {a} out of range for length {n}"
            )));
        }
        if idx[..k].contains(&a) {
            return Err(Error::ShapeError(format!("repeated index {a}")));
        }
    }
    Ok(())
}

fn gen(i: usize, j: usize, lambda: AlgebraElement) -> ElementaryGen {
    ElementaryGen { i, j, lambda }
}

/// The six-generator word `e_ij(w) e_ji(−u) e_ij(w) e_ij(−1) e_ji(1) e_ij(−1)`.
fn whitehead_word(
    parent: &Arc<Algebra>,
    n: usize,
    i: usize,
    j: usize,
    u: &AlgebraElement,
    w: &AlgebraElement,
) -> ElementaryWord {
    let one = parent.one();
    let gens = vec![
        gen(i, j, w.clone()),
        gen(j, i, -u),
        gen(i, j, w.clone()),
        gen(i, j, -&one),
        gen(j, i, one.clone()),
        gen(i, j, -&one),
    ];
    ElementaryWord::new(n, gens).expect("indices checked")
}

/// The 2×2 block of the word's matrix on coordinates `(i, j)`.
fn block(
    word: &ElementaryWord,
    parent: &Arc<Algebra>,
    i: usize,
    j: usize,
) -> [[AlgebraElement; 2]; 2] {
    let m = word.matrix(parent);
    [
        [m[i][i].clone(), m[i][j].clone()],
        [m[j][i].clone(), m[j][j].clone()],
    ]
}

fn parent_of(m: &MoveMacro) -> Option<&Arc<Algebra>> {
    match m {
        MoveMacro::Add { lambda, .. } => Some(lambda.parent()),
        MoveMacro::SwapSign { .. } => None,
        MoveMacro::ScaleUnitPair { unit, .. } => Some(unit.parent()),
        MoveMacro::CongruentUnitScale { unit, .. } => Some(unit.parent()),
        MoveMacro::WhiteheadModCoordinate { u, .. } => Some(u.parent()),
    }
}

/// Expands a macro into an elementary word of size `n`, validating its certificate first.
///
/// `SwapSign` carries no algebra, so its parameters live in `parent`.
pub fn macro_expand(m: &MoveMacro, n: usize, parent: &Arc<Algebra>) -> Result<ElementaryWord> {
    if let Some(p) = parent_of(m) {
        if !same_algebra(p, parent) {
            return Err(Error::RingMismatch);
        }
    }
    match m {
        MoveMacro::Add { i, j, lambda } => {
            check_indices(n, &[*i, *j])?;
            ElementaryWord::new(n, vec![gen(*i, *j, lambda.clone())])
        }
        MoveMacro::SwapSign { i, j } => {
            check_indices(n, &[*i, *j])?;
            let one = parent.one();
            ElementaryWord::new(
                n,
                vec![
                    gen(*i, *j, one.clone()),
                    gen(*j, *i, -&one),
                    gen(*i, *j, one.clone()),
                ],
            )
        }
        MoveMacro::ScaleUnitPair {
            i,
            j,
            unit,
            inverse,
        } => {
            check_indices(n, &[*i, *j])?;
            if !(unit * inverse).is_one() {
                return Err(Error::BadCertificate("unit certificate: u·u⁻¹ ≠ 1".into()));
            }
            let word = whitehead_word(parent, n, *i, *j, inverse, unit);
            let b = block(&word, parent, *i, *j);
            if b[0][0] != *unit || !b[0][1].is_zero() || !b[1][0].is_zero() || b[1][1] != *inverse {
                return Err(Error::BadCertificate("unit pair expansion mismatch".into()));
            }
            Ok(word)
        }
        MoveMacro::CongruentUnitScale {
            i,
            base,
            unit,
            coeffs,
            row,
            inverse,
        } => {
            check_indices(n, &[*i])?;
            if coeffs.len() != n || row.len() != n {
                return Err(Error::ShapeError(
                    "congruence certificate must have one entry per coordinate".into(),
                ));
            }
            if !coeffs[*i].is_zero() {
                return Err(Error::BadCertificate(
                    "congruence coefficient on the scaled coordinate".into(),
                ));
            }
            let combo = coeffs
                .iter()
                .zip(row)
                .fold(parent.one(), |acc, (c, a)| &acc + &(c * a));
            if combo != *unit {
                return Err(Error::BadCertificate("unit is not 1 + Σ c_j·a_j".into()));
            }
            let scaled = unit * base;
            let (start, end) = if *inverse {
                (&scaled, base)
            } else {
                (base, &scaled)
            };
            if row[*i] != *start {
                return Err(Error::BadCertificate(
                    "row entry does not match the declared base".into(),
                ));
            }
            let mut word = ElementaryWord::empty(n);
            for (j, c) in coeffs.iter().enumerate() {
                let lambda = c * base;
                word.add(j, *i, if *inverse { -&lambda } else { lambda })?;
            }
            let out = word.apply(row)?;
            let mut expected = row.clone();
            expected[*i] = end.clone();
            if out != expected {
                return Err(Error::BadCertificate(
                    "congruence expansion mismatch".into(),
                ));
            }
            Ok(word)
        }
        MoveMacro::WhiteheadModCoordinate {
            i,
            j,
            pivot,
            pivot_value,
            u,
            w,
            c,
        } => {
            check_indices(n, &[*i, *j, *pivot])?;
            let a = pivot_value;
            if (u * w) != &parent.one() + &(c * a) {
                return Err(Error::BadCertificate(
                    "Whitehead certificate: u·w ≠ 1 + c·a".into(),
                ));
            }
            let word = whitehead_word(parent, n, *i, *j, u, w);
            let b = block(&word, parent, *i, *j);
            let ac = a * c;
            let expected = [[w - &(&ac * w), ac.clone()], [-&ac, u.clone()]];
            if b != expected {
                return Err(Error::BadCertificate("Whitehead expansion mismatch".into()));
            }
            Ok(word)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_algebra;
    use crate::arith::FieldConfig;

    #[test]
    fn congruent_unit_scale_example() {
        let k = make_algebra(FieldConfig::Rationals, &["x1", "a"], &[]).unwrap();
        let (x1, a) = (k.parse("x1").unwrap(), k.parse("a").unwrap());
        let m = MoveMacro::CongruentUnitScale {
            i: 1,
            base: a.clone(),
            unit: k.parse("1-x1").unwrap(),
            coeffs: vec![k.from_i64(-1), k.zero()],
            row: vec![x1.clone(), a.clone()],
            inverse: false,
        };
        let w = macro_expand(&m, 2, &k).unwrap();
        assert_eq!(w.gens().len(), 1);
        assert_eq!(
            w.apply(&[x1.clone(), a.clone()]).unwrap()[1],
            k.parse("a-x1*a").unwrap()
        );

        let bad = MoveMacro::CongruentUnitScale {
            i: 1,
            base: a.clone(),
            unit: k.parse("1+x1").unwrap(),
            coeffs: vec![k.from_i64(-1), k.zero()],
            row: vec![x1, a],
            inverse: false,
        };
        assert!(matches!(
            macro_expand(&bad, 2, &k),
            Err(Error::BadCertificate(_))
        ));
    }

    #[test]
    fn unit_pair_and_whitehead() {
        let k = make_algebra(
            FieldConfig::Rationals,
            &["t", "s", "p", "q", "a"],
            &["t*s-1"],
        )
        .unwrap();
        let (t, s) = (k.parse("t").unwrap(), k.parse("s").unwrap());
        let row = vec![
            k.parse("p").unwrap(),
            k.parse("q").unwrap(),
            k.parse("a").unwrap(),
        ];
        let w = macro_expand(
            &MoveMacro::ScaleUnitPair {
                i: 0,
                j: 1,
                unit: t.clone(),
                inverse: s.clone(),
            },
            3,
            &k,
        )
        .unwrap();
        assert_eq!(
            w.apply(&row).unwrap(),
            vec![
                k.parse("t*p").unwrap(),
                k.parse("s*q").unwrap(),
                row[2].clone()
            ]
        );

        let bad = MoveMacro::ScaleUnitPair {
            i: 0,
            j: 1,
            unit: t.clone(),
            inverse: t.clone(),
        };
        assert!(matches!(
            macro_expand(&bad, 3, &k),
            Err(Error::BadCertificate(_))
        ));
    }
}
