use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use umrow_core::algebra::{make_algebra, Algebra, AlgebraElement, RingHom};
use umrow_core::quadric::{
    build_q_even, build_q_odd, degree_after_mu_minus_one, delta_map, e_endo, eta_hom,
    eta_ideal_equality, evaluate_lambda, fold_model_certificate, fold_model_row, jouanolou_lift,
    mu_ab_identity, mu_hom, mu_prime_basepoint_check, mu_prime_formula, mu_prime_hom, phi_map,
    phi_matches_eta, tamper, universal_row, x_last_inverse_mod_ix, QuadricEvenPoint, VTildeRing,
};
use umrow_core::rows::{
    determinant, mennicke_newman, vdk_add, ElementaryWord, MennickeNewman, ShrinkConfig,
    UnimodularRow,
};
use umrow_core::Error;

use crate::config::{field_name, Suite, SuiteConfig};
use crate::report::{CaseResult, Report, Status};

/// `Ok(None)` passes, `Ok(Some(witness))` fails.
type Outcome = Result<Option<String>, Error>;

struct Case {
    name: &'static str,
    n: usize,
    run: Box<dyn Fn() -> Outcome>,
}

fn case(name: &'static str, n: usize, run: impl Fn() -> Outcome + 'static) -> Case {
    Case {
        name,
        n,
        run: Box::new(run),
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(witness()) })
}

fn show(images: &[AlgebraElement]) -> String {
    let parts: Vec<String> = images.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn images_match(h: &RingHom, expected: &[AlgebraElement]) -> Outcome {
    check(h.images() == expected, || {
        format!("got {}, expected {}", show(h.images()), show(expected))
    })
}

/// Runs a suite and assembles its report; case order depends only on the configuration.
pub fn run_suite(config: &SuiteConfig) -> Report {
    let mut results = Vec::new();
    for c in cases(config) {
        let start = Instant::now();
        let outcome = (c.run)();
        let millis = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(w)) => (Status::Fail, Some(w)),
            Err(e @ (Error::NotWellDefined { .. } | Error::CertificateAssemblyFailed { .. })) => {
                (Status::Fail, Some(e.to_string()))
            }
            Err(e) => (Status::Error, Some(e.to_string())),
        };
        results.push(CaseResult {
            name: c.name.to_string(),
            n: c.n,
            field: field_name(config.field),
            status,
            witness,
            millis,
        });
    }
    Report::new(config, results)
}

fn cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let suites: &[Suite] = match config.suite {
        Suite::All => &[Suite::Identities, Suite::Euler, Suite::Rows, Suite::Fold],
        ref s => std::slice::from_ref(s),
    };
    for &suite in suites {
        for n in config.n_min..=config.n_max {
            match suite {
                Suite::Identities => identity_cases(config, n, &mut out),
                Suite::Euler => euler_cases(config, n, &mut out),
                Suite::Rows => row_cases(config, n, &mut out),
                // Certificates are only assembled from n = 4 on; the full run leaves smaller n out.
                Suite::Fold => {
                    fold_cases(config, n, config.suite == Suite::Fold || n >= 4, &mut out)
                }
                Suite::All => unreachable!(),
            }
        }
    }
    out
}

fn identity_cases(config: &SuiteConfig, n: usize, out: &mut Vec<Case>) {
    let field = config.field;
    out.push(case("eta/relation", n, move || {
        eta_hom(n, field).map(|_| None)
    }));
    out.push(case("eta/fibre-ideal", n, move || {
        if !eta_ideal_equality(n, field)? {
            return Ok(Some("pulled-back ideal differs from <x_1..x_n>".into()));
        }
        let inv = x_last_inverse_mod_ix(n, field)?;
        let expected = format!("y{}", n + 1);
        check(
            inv.as_ref().map(|e| e.to_string()) == Some(expected.clone()),
            || {
                format!(
                    "inverse of x{} is {:?}, expected {expected}",
                    n + 1,
                    inv.map(|e| e.to_string())
                )
            },
        )
    }));
    out.push(case("mu/relation", n, move || {
        mu_hom(n, field).map(|_| None)
    }));
    out.push(case("mu/ab-identity", n, move || {
        check(mu_ab_identity(n, field)?, || {
            "a(t,z)a(1/t,z) + b(t)xy - 1 is nonzero".into()
        })
    }));
    out.push(case("mu/at-one", n, move || {
        let h = evaluate_lambda(&mu_hom(n, field)?, &field.one())?;
        let q = build_q_even(n, field)?;
        let a = q.algebra();
        let mut expected: Vec<AlgebraElement> = (0..n).map(|i| a.var_at(i)).collect();
        expected.push(a.one());
        expected.extend((0..n).map(|_| a.zero()));
        expected.push(a.one());
        images_match(&h, &expected)
    }));
    out.push(case("E/relation", n, move || {
        e_endo(n, field).map(|_| None)
    }));
    out.push(case("E/base-point", n, move || {
        let e = e_endo(n, field)?;
        let odd = build_q_odd(n, field)?;
        let k = make_algebra::<&str>(field, &[], &[])?;
        let at_base = odd.base_point_hom(&k)?;
        let composite = at_base.compose(&e)?;
        check(composite.images() == at_base.images(), || {
            show(composite.images())
        })
    }));
    out.push(case("mu-prime/formula", n, move || {
        let formula = mu_prime_formula(n, field)?;
        images_match(&mu_prime_hom(n, field)?, formula.images())
    }));
    out.push(case("mu-prime/base-point", n, move || {
        check(mu_prime_basepoint_check(n, field)?, || {
            "base point not preserved".into()
        })
    }));
}

fn euler_cases(config: &SuiteConfig, d: usize, out: &mut Vec<Case>) {
    let field = config.field;
    out.push(case("delta/splitting", d, move || {
        let q = build_q_even(d, field)?;
        let p = QuadricEvenPoint::generic(&q)?;
        let (row, split) = delta_map(&p)?;
        check(row.is_verified() && split.pairing().is_one(), || {
            split.pairing().to_string()
        })
    }));
    out.push(case("mu-minus-one/formula", d, move || {
        if field.characteristic() == 2 {
            return Err(Error::CharacteristicTwoUnsupported);
        }
        let h = evaluate_lambda(&mu_hom(d, field)?, &field.from_i64(-1))?;
        let q = build_q_even(d, field)?;
        let a = q.algebra();
        let last = &a.one() - &a.var_at(2 * d).scale(&field.from_i64(2));
        let mut expected: Vec<AlgebraElement> = (0..d).map(|i| a.var_at(i)).collect();
        expected.push(last.clone());
        expected.extend((0..d).map(|i| a.var_at(d + i).scale(&field.from_i64(4))));
        expected.push(last);
        images_match(&h, &expected)
    }));
    out.push(case("degree/composite", d, move || {
        let h = degree_after_mu_minus_one(d, field)?;
        let q = build_q_even(d, field)?;
        let a = q.algebra();
        let two = field.from_i64(2);
        let last = &a.one() - &a.var_at(2 * d).scale(&two);
        let mut expected: Vec<AlgebraElement> = (0..d).map(|i| a.var_at(i).scale(&two)).collect();
        expected.push(last.clone());
        expected.extend((0..d).map(|i| a.var_at(d + i).scale(&two)));
        expected.push(last);
        images_match(&h, &expected)
    }));
    out.push(case("phi/universal", d, move || {
        let (row, _) = universal_row(d + 1, field)?;
        let phi = phi_map(&row, false)?;
        if !phi.point.defect().is_zero() {
            return Ok(Some(phi.point.defect().to_string()));
        }
        check(phi_matches_eta(&row)?, || {
            "phi point differs from eta of the lift".into()
        })
    }));
}

/// A random unimodular row: the base row moved by `steps` random elementary generators with
/// parameters of degree at most one in the algebra's variables.
pub fn random_row(
    parent: &Arc<Algebra>,
    n: usize,
    steps: usize,
    rng: &mut ChaCha8Rng,
) -> Result<UnimodularRow, Error> {
    let base = UnimodularRow::base_row(parent, n)?;
    let mut word = ElementaryWord::empty(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut lambda = parent.from_i64(rng.gen_range(-3..=3));
        for v in parent.vars() {
            lambda = &lambda + &v.scale(&parent.field().from_i64(rng.gen_range(-1..=1)));
        }
        word.add(i, j, lambda)?;
    }
    base.apply(&word)
}

/// Failed postconditions of a Mennicke–Newman run, empty when all hold.
pub fn mennicke_postconditions(
    u: &UnimodularRow,
    v: &UnimodularRow,
    mn: &MennickeNewman,
) -> Vec<String> {
    let mut bad = Vec::new();
    let parent = u.parent();
    let one = parent.one();
    let (fu, fv) = match (mn.eu.apply(u.entries()), mn.ev.apply(v.entries())) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return vec!["word does not apply".into()],
    };
    if fu[0] != mn.x || fu[1..] != mn.a[..] {
        bad.push(format!("u·Eu = {} is not (x, a)", show(&fu)));
    }
    if fv[0] != &one - &mn.x || fv[1..] != mn.a[..] {
        bad.push(format!("v·Ev = {} is not (1 - x, a)", show(&fv)));
    }
    if !(&fu[0] + &fv[0]).is_one() {
        bad.push("first entries do not sum to 1".into());
    }
    let (u2, v2) = (&mn.u2, &mn.v2);
    for i in 1..u.len() {
        let d = &u2[i] - &v2[i];
        let from_u = &u2[i] - &(&u2[0] * &d);
        let from_v = &v2[i] + &(&v2[0] * &d);
        if from_u != from_v || from_u != mn.a[i - 1] {
            bad.push(format!("the two expressions for a_{} disagree", i + 1));
        }
    }
    for (name, w) in [("Eu", &mn.eu), ("Ev", &mn.ev)] {
        match determinant(parent, &w.matrix(parent)) {
            Ok(det) if det.is_one() => {}
            Ok(det) => bad.push(format!("det {name} = {det}")),
            Err(e) => bad.push(format!("det {name}: {e}")),
        }
    }
    bad
}

const RANDOM_PAIRS: usize = 10;

fn row_cases(config: &SuiteConfig, n: usize, out: &mut Vec<Case>) {
    let field = config.field;
    let shrink = ShrinkConfig {
        budget: config.shrink_budget,
        seed: config.seed,
        hints: None,
    };
    if n < 2 {
        return;
    }
    let seed = config.seed;
    let cfg = shrink.clone();
    out.push(case("mn/random-scalar", n, move || {
        let k = make_algebra::<&str>(field, &[], &[])?;
        random_pairs(&k, n, seed, &cfg)
    }));
    let cfg = shrink.clone();
    out.push(case("mn/random-line", n, move || {
        let k = make_algebra(field, &["t"], &[])?;
        random_pairs(&k, n, seed ^ 0x5eed, &cfg)
    }));
    let cfg = shrink.clone();
    out.push(case("mn/vtilde-pair", n, move || {
        let vt = VTildeRing::new(n, field)?;
        let (u, _) = vt.x_row()?;
        let (v, _) = vt.u_row()?;
        let mn = mennicke_newman(&u, &v, &cfg)?;
        let bad = mennicke_postconditions(&u, &v, &mn);
        check(bad.is_empty() && mn.shrink.is_none(), || bad.join("; "))
    }));
    let cfg = shrink;
    out.push(case("vdk/sum", n, move || {
        let k = make_algebra(field, &["t"], &[])?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_row(&k, n, 4, &mut rng)?;
        let v = random_row(&k, n, 4, &mut rng)?;
        let s = vdk_add(&u, &v, &cfg)?;
        check(s.sum.reverify().is_ok(), || {
            format!("sum {} is not unimodular", s.sum)
        })
    }));
    out.push(case("splitting/jouanolou", n, move || {
        let k = make_algebra(field, &["t"], &[])?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let row = random_row(&k, n, 4, &mut rng)?;
        let lift = jouanolou_lift(&row)?;
        check(lift.x == row.entries() && lift.pairing().is_one(), || {
            format!("lift of {row} fails")
        })
    }));
}

fn random_pairs(k: &Arc<Algebra>, n: usize, seed: u64, cfg: &ShrinkConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
    for pair in 0..RANDOM_PAIRS {
        let u = random_row(k, n, 3, &mut rng)?;
        let v = random_row(k, n, 3, &mut rng)?;
        let mn = mennicke_newman(&u, &v, cfg)?;
        let bad = mennicke_postconditions(&u, &v, &mn);
        if !bad.is_empty() {
            return Ok(Some(format!("pair {pair} ({u}, {v}): {}", bad.join("; "))));
        }
    }
    Ok(None)
}

fn fold_cases(config: &SuiteConfig, n: usize, with_certificate: bool, out: &mut Vec<Case>) {
    let field = config.field;
    if n < 2 {
        return;
    }
    out.push(case("fold/ring", n, move || {
        let vt = VTildeRing::new(n, field)?;
        let ok = vt.x_row()?.0.is_verified()
            && vt.u_row()?.0.is_verified()
            && vt.tail_row()?.0.is_verified();
        check(ok, || "a registered row failed verification".into())
    }));
    out.push(case("fold/row", n, move || {
        let vt = VTildeRing::new(n, field)?;
        let fold = fold_model_row(&vt)?;
        let expected = vt.expected_fold_row();
        check(
            fold.v.entries() == expected.as_slice() && fold.witness.pairing().is_one(),
            || format!("got {}, expected {}", fold.v, show(&expected)),
        )
    }));
    if with_certificate {
        out.push(case("fold/certificate", n, move || {
            let vt = VTildeRing::new(n, field)?;
            let cert = fold_model_certificate(&vt)?;
            if !cert.verify() {
                return Ok(Some("certificate does not replay".into()));
            }
            let parent = vt.algebra();
            let det = determinant(parent, &cert.word.matrix(parent))?;
            if !det.is_one() {
                return Ok(Some(format!("det = {det}")));
            }
            for k in 0..cert.word.gens().len() {
                if tamper(&cert, k)?.verify() {
                    return Ok(Some(format!(
                        "tampering generator {} still verifies",
                        k + 1
                    )));
                }
            }
            Ok(None)
        }));
    }
}
