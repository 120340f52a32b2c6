use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraElement};
use crate::arith::FieldConfig;
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};
use crate::rows::{
    macro_expand, vdk_add, verify_certificate, ElementaryGen, ElementaryWord, MoveMacro,
    OrbitCertificate, ShrinkConfig, SplittingRow, UnimodularRow, VdkSum,
};

/// `k[Ṽ_{2n}]` on `x, y, u, v` (length `n`) and `r, s` (indices `2..n`) with
/// `x·y = 1`, `u·v = 1`, `x′·r′ + u′·s′ = 1`, where `′` drops the first coordinate.
#[derive(Clone, Debug)]
pub struct VTildeRing {
    n: usize,
    algebra: Arc<Algebra>,
}

impl VTildeRing {
    pub fn new(n: usize, field: FieldConfig) -> Result<Self> {
        if n < 2 {
            return Err(Error::ShapeError("the fold ring needs n >= 2".into()));
        }
        let mut names = Vec::with_capacity(6 * n - 2);
        for p in ["x", "y", "u", "v"] {
            names.extend((1..=n).map(|i| format!("{p}{i}")));
        }
        for p in ["r", "s"] {
            names.extend((2..=n).map(|i| format!("{p}{i}")));
        }
        let ring = PolyRing::new(field, names)?;
        let var = |i: usize| Polynomial::var(&ring, i);
        let pairing = |a: &[usize], b: &[usize]| {
            a.iter()
                .zip(b)
                .fold(Polynomial::from_i64(&ring, -1), |acc, (&i, &j)| {
                    &acc + &(&var(i) * &var(j))
                })
        };
        let block = |k: usize| -> Vec<usize> { (k * n..(k + 1) * n).collect() };
        let (x, y, u, v) = (block(0), block(1), block(2), block(3));
        let r: Vec<usize> = (4 * n..5 * n - 1).collect();
        let s: Vec<usize> = (5 * n - 1..6 * n - 2).collect();
        let mut tail_a = x[1..].to_vec();
        tail_a.extend_from_slice(&u[1..]);
        let mut tail_b = r.clone();
        tail_b.extend_from_slice(&s);
        let rels = vec![pairing(&x, &y), pairing(&u, &v), pairing(&tail_a, &tail_b)];
        let algebra = Algebra::new(&ring, rels)?;
        Ok(VTildeRing { n, algebra })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    fn block(&self, k: usize) -> Vec<AlgebraElement> {
        (k * self.n..(k + 1) * self.n)
            .map(|i| self.algebra.var_at(i))
            .collect()
    }

    pub fn x(&self) -> Vec<AlgebraElement> {
        self.block(0)
    }

    pub fn y(&self) -> Vec<AlgebraElement> {
        self.block(1)
    }

    pub fn u(&self) -> Vec<AlgebraElement> {
        self.block(2)
    }

    pub fn v(&self) -> Vec<AlgebraElement> {
        self.block(3)
    }

    pub fn r(&self) -> Vec<AlgebraElement> {
        (4 * self.n..5 * self.n - 1)
            .map(|i| self.algebra.var_at(i))
            .collect()
    }

    pub fn s(&self) -> Vec<AlgebraElement> {
        (5 * self.n - 1..6 * self.n - 2)
            .map(|i| self.algebra.var_at(i))
            .collect()
    }

    /// `(x_1, …, x_n)` with splitting `y`.
    pub fn x_row(&self) -> Result<(UnimodularRow, SplittingRow)> {
        self.split_row(self.x(), self.y())
    }

    /// `(u_1, …, u_n)` with splitting `v`.
    pub fn u_row(&self) -> Result<(UnimodularRow, SplittingRow)> {
        self.split_row(self.u(), self.v())
    }

    /// `(x′, u′)` of length `2n − 2` with splitting `(r′, s′)`.
    pub fn tail_row(&self) -> Result<(UnimodularRow, SplittingRow)> {
        let mut a = self.x()[1..].to_vec();
        a.extend_from_slice(&self.u()[1..]);
        let mut b = self.r();
        b.extend(self.s());
        self.split_row(a, b)
    }

    fn split_row(
        &self,
        a: Vec<AlgebraElement>,
        b: Vec<AlgebraElement>,
    ) -> Result<(UnimodularRow, SplittingRow)> {
        let row = UnimodularRow::unchecked(&self.algebra, a)?;
        let split = SplittingRow::new(&row, b)?;
        Ok((row.reverify()?, split))
    }

    /// `(x_1(1 − x_1), …, x_{n−1}(1 − x_1), x_n + (1 − x_n)x_1)`.
    pub fn expected_fold_row(&self) -> Vec<AlgebraElement> {
        let x = self.x();
        let one = self.algebra.one();
        let r = &one - &x[0];
        let mut out: Vec<AlgebraElement> = x[..self.n - 1].iter().map(|xi| xi * &r).collect();
        out.push(&x[self.n - 1] + &(&(&one - &x[self.n - 1]) * &x[0]));
        out
    }
}

/// The fold row `[x] + [(0, …, 0, 1)]` and the unimodularity witness of `(a, 1 − x_1)`,
/// `a = x_n + (1 − x_n)x_1`, with splitting `(1, 1 − x_n)`.
#[derive(Clone, Debug)]
pub struct FoldModelRow {
    pub v: UnimodularRow,
    pub sum: VdkSum,
    pub witness: SplittingRow,
}

pub fn fold_model_row(vt: &VTildeRing) -> Result<FoldModelRow> {
    let (x, _) = vt.x_row()?;
    let base = UnimodularRow::base_row(vt.algebra(), vt.n)?;
    let sum = vdk_add(&x, &base, &ShrinkConfig::default())?;
    if sum.mn.shrink.is_some() || sum.sum.entries() != vt.expected_fold_row().as_slice() {
        return Err(Error::CertificateAssemblyFailed {
            stage: "fold row".into(),
        });
    }
    let alg = vt.algebra();
    let xs = vt.x();
    let one = alg.one();
    let a = vt.expected_fold_row()[vt.n - 1].clone();
    let pair = UnimodularRow::unchecked(alg, vec![a, &one - &xs[0]])?;
    let witness = SplittingRow::new(&pair, vec![one.clone(), &one - &xs[vt.n - 1]])?;
    Ok(FoldModelRow {
        v: sum.sum.clone(),
        sum,
        witness,
    })
}

fn stage(
    name: &str,
    macros: &[MoveMacro],
    n: usize,
    alg: &Arc<Algebra>,
    row: &mut Vec<AlgebraElement>,
    expected: &[AlgebraElement],
    word: &mut ElementaryWord,
) -> Result<()> {
    let failed = || Error::CertificateAssemblyFailed { stage: name.into() };
    for m in macros {
        let w = macro_expand(m, n, alg).map_err(|_| failed())?;
        *row = w.apply(row)?;
        word.extend(&w)?;
    }
    if row.as_slice() != expected {
        return Err(failed());
    }
    Ok(())
}

/// Undoes `row[i] = r^k·base` where `r^k = 1 + c·row[0]`.
fn unscale(
    i: usize,
    base: &AlgebraElement,
    unit: &AlgebraElement,
    c0: AlgebraElement,
    row: &[AlgebraElement],
) -> MoveMacro {
    let parent = base.parent();
    let mut coeffs = vec![parent.zero(); row.len()];
    coeffs[0] = c0;
    MoveMacro::CongruentUnitScale {
        i,
        base: base.clone(),
        unit: unit.clone(),
        coeffs,
        row: row.to_vec(),
        inverse: true,
    }
}

/// An elementary word taking the fold row back to `(x_1, …, x_n)`, assembled from macros and
/// checked stage by stage.
pub fn fold_model_certificate(vt: &VTildeRing) -> Result<OrbitCertificate> {
    let n = vt.n;
    if n < 4 {
        return Err(Error::Unsupported(
            "certificate assembly requires n ≥ 4".into(),
        ));
    }
    let fold = fold_model_row(vt)?;
    let alg = vt.algebra();
    let x = vt.x();
    let one = alg.one();
    let r = &one - &x[0];
    let w = &one - &x[n - 1];
    let a = fold.v.entries()[n - 1].clone();
    let p = fold.v.entries()[0].clone();
    let q = fold.v.entries()[1].clone();
    let piv = n - 1;

    let mut row = fold.v.entries().to_vec();
    let mut word = ElementaryWord::empty(n);

    // Whitehead move on the first two coordinates, modulo the pivot a.
    let wp = &w * &p;
    let mut expected = row.clone();
    expected[0] = &wp + &(&a * &(&wp + &q));
    expected[1] = &(&r * &q) - &(&a * &p);
    let white = MoveMacro::WhiteheadModCoordinate {
        i: 0,
        j: 1,
        pivot: piv,
        pivot_value: a.clone(),
        u: r.clone(),
        w: w.clone(),
        c: -&one,
    };
    stage(
        "whitehead",
        &[white],
        n,
        alg,
        &mut row,
        &expected,
        &mut word,
    )?;

    // Clear the pivot multiples: the first coordinate becomes x_1, the second r²·x_2.
    let cleanup = [
        MoveMacro::Add {
            i: piv,
            j: 0,
            lambda: -&(&wp + &q),
        },
        MoveMacro::Add {
            i: piv,
            j: 1,
            lambda: p.clone(),
        },
        MoveMacro::Add {
            i: piv,
            j: 0,
            lambda: x[0].clone(),
        },
    ];
    expected[0] = x[0].clone();
    expected[1] = &(&r * &r) * &x[1];
    stage(
        "pivot cleanup",
        &cleanup,
        n,
        alg,
        &mut row,
        &expected,
        &mut word,
    )?;

    // r² = 1 + (x_1 − 2)·x_1.
    let r2 = &r * &r;
    let m = unscale(1, &x[1], &r2, &x[0] - &alg.from_i64(2), &row);
    expected[1] = x[1].clone();
    stage(
        "second coordinate",
        &[m],
        n,
        alg,
        &mut row,
        &expected,
        &mut word,
    )?;

    // r = 1 + (−1)·x_1 on the middle coordinates.
    for i in 2..n - 1 {
        let m = unscale(i, &x[i], &r, -&one, &row);
        expected[i] = x[i].clone();
        stage(
            &format!("coordinate {}", i + 1),
            &[m],
            n,
            alg,
            &mut row,
            &expected,
            &mut word,
        )?;
    }

    let sub = MoveMacro::Add {
        i: 0,
        j: piv,
        lambda: -&one,
    };
    expected[piv] = &x[piv] * &r;
    stage(
        "last coordinate shift",
        &[sub],
        n,
        alg,
        &mut row,
        &expected,
        &mut word,
    )?;
    let m = unscale(piv, &x[piv], &r, -&one, &row);
    expected[piv] = x[piv].clone();
    stage(
        "last coordinate",
        &[m],
        n,
        alg,
        &mut row,
        &expected,
        &mut word,
    )?;

    let (to, _) = vt.x_row()?;
    let cert = OrbitCertificate {
        from: fold.v,
        to,
        word,
    };
    if !verify_certificate(&cert) {
        return Err(Error::CertificateAssemblyFailed {
            stage: "replay".into(),
        });
    }
    Ok(cert)
}

/// A copy of `cert` with `1` added to the parameter of generator `index`.
pub fn tamper(cert: &OrbitCertificate, index: usize) -> Result<OrbitCertificate> {
    let gens = cert.word.gens();
    if index >= gens.len() {
        return Err(Error::ShapeError(format!(
            "word has {} generators",
            gens.len()
        )));
    }
    let mut changed = gens.to_vec();
    let g = &changed[index];
    changed[index] = ElementaryGen::new(g.i, g.j, &g.lambda + &g.lambda.parent().one())?;
    Ok(OrbitCertificate {
        from: cert.from.clone(),
        to: cert.to.clone(),
        word: ElementaryWord::new(cert.word.len(), changed)?,
    })
}
