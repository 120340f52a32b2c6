//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use umrow_cli::suites::{mennicke_postconditions, random_row};
use umrow_core::algebra::{make_algebra, AlgebraElement};
use umrow_core::poly::{parse_polynomial, Ideal, Monomial, PolyRing, Polynomial};
use umrow_core::quadric::{
    a_of, b_of, build_q_even, degree_after_mu_minus_one, delta_map, e_endo, eta_hom,
    eta_ideal_equality, evaluate_lambda, fold_model_certificate, fold_model_row, mu_hom,
    mu_prime_basepoint_check, mu_prime_formula, mu_prime_hom, phi_map, tamper, universal_row,
    x_last_inverse_mod_ix, GmQuadricRing, QuadricEvenPoint, VTildeRing,
};
use umrow_core::rows::{
    determinant, mennicke_newman, verify_certificate, ElementaryWord, ShrinkConfig,
};
use umrow_core::{FieldConfig, Scalar};

type Check = Result<(), String>;

const Q: FieldConfig = FieldConfig::Rationals;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn dot(a: &[AlgebraElement], b: &[AlgebraElement]) -> AlgebraElement {
    a.iter()
        .zip(b)
        .fold(a[0].parent().zero(), |acc, (x, y)| &acc + &(x * y))
}

fn eta_relation() -> Check {
    for field in [Q, FieldConfig::PrimeField(5)] {
        for n in 2..=5 {
            let eta = eta_hom(n, field).map_err(err)?;
            let im = eta.images();
            let z = &im[2 * n];
            let defect = &dot(&im[..n], &im[n..2 * n]) - &(z * &(&z.parent().one() - z));
            ensure(defect.is_zero(), || {
                format!("n={n} over {field}: residue {defect}")
            })?;
        }
    }
    Ok(())
}

fn eta_ideals() -> Check {
    for n in 2..=3 {
        ensure(eta_ideal_equality(n, Q).map_err(err)?, || {
            format!("n={n}: ideals differ")
        })?;
        let eta = eta_hom(n, Q).map_err(err)?;
        let a = eta.target().clone();
        let mut pulled = eta.images()[..n].to_vec();
        pulled.push(eta.images()[2 * n].clone());
        let xs: Vec<_> = (0..n).map(|i| a.var_at(i)).collect();
        // Containment both ways, via explicit cofactors.
        for f in &pulled {
            let c = a.lift(f, &xs).map_err(err)?;
            ensure(&dot(&c, &xs) == f, || format!("n={n}: {f} not in <x>"))?;
        }
        for f in &xs {
            let c = a.lift(f, &pulled).map_err(err)?;
            ensure(&dot(&c, &pulled) == f, || {
                format!("n={n}: {f} not in the pulled-back ideal")
            })?;
        }
        let inv = x_last_inverse_mod_ix(n, Q).map_err(err)?;
        ensure(inv.is_some(), || {
            format!("n={n}: x_(n+1) not a unit mod <x>")
        })?;
    }
    Ok(())
}

fn identities() -> Check {
    for n in 1..=4 {
        let gm = GmQuadricRing::new(n, Q).map_err(err)?;
        let (t, ti, z) = (gm.t(), gm.t_inv(), gm.z());
        let xy: Vec<_> = (0..n).map(|i| &gm.x(i) * &gm.y(i)).collect();
        let s = xy.iter().fold(gm.algebra().zero(), |acc, e| &acc + e);
        let lhs = &a_of(&t, &z) * &a_of(&ti, &z);
        ensure(lhs == &gm.algebra().one() - &(&b_of(&t, &ti) * &s), || {
            format!("n={n}: a/b identity")
        })?;

        let e = e_endo(n, Q).map_err(err)?;
        let v = e.source().vars();
        let one = e.source().one();
        let (zz, w) = (&v[n], &v[2 * n + 1]);
        let display = (0..n).fold(zz * &(&(w + &one) - &(zz * w)), |acc, i| {
            &acc + &(&(&v[i] * &(&one - zz)) * &v[n + 1 + i])
        });
        ensure(display.is_one(), || {
            format!("n={n}: E display gives {display}")
        })?;

        let composite = mu_prime_hom(n, Q).map_err(err)?;
        let formula = mu_prime_formula(n, Q).map_err(err)?;
        ensure(composite.images() == formula.images(), || {
            format!("n={n}: E∘mu differs from mu'")
        })?;
        ensure(mu_prime_basepoint_check(n, Q).map_err(err)?, || {
            format!("n={n}: mu' moves the base point")
        })?;

        let at_one = evaluate_lambda(&mu_hom(n, Q).map_err(err)?, &Q.one()).map_err(err)?;
        let q = at_one.target().clone();
        let mut expected = q.vars()[..n].to_vec();
        expected.push(q.one());
        expected.extend((0..n).map(|_| q.zero()));
        expected.push(q.one());
        ensure(at_one.images() == expected.as_slice(), || {
            format!("n={n}: mu(1) is wrong")
        })?;
    }
    Ok(())
}

fn euler() -> Check {
    let two = Q.from_i64(2);
    for d in 2..=3 {
        let q = build_q_even(d, Q).map_err(err)?;
        let (row, split) = delta_map(&QuadricEvenPoint::generic(&q).map_err(err)?).map_err(err)?;
        ensure(dot(row.entries(), split.entries()).is_one(), || {
            format!("d={d}: delta splitting")
        })?;

        let v = q.algebra().vars();
        let one_minus_2s = &q.algebra().one() - &v[2 * d].scale(&two);
        let mu_m1 = evaluate_lambda(&mu_hom(d, Q).map_err(err)?, &Q.from_i64(-1)).map_err(err)?;
        let mut expected = v[..d].to_vec();
        expected.push(one_minus_2s.clone());
        expected.extend(v[d..2 * d].iter().map(|y| y.scale(&Q.from_i64(4))));
        expected.push(one_minus_2s.clone());
        ensure(mu_m1.images() == expected.as_slice(), || {
            format!("d={d}: mu(-1) formula")
        })?;

        let comp = degree_after_mu_minus_one(d, Q).map_err(err)?;
        let mut expected: Vec<_> = v[..d].iter().map(|a| a.scale(&two)).collect();
        expected.push(one_minus_2s.clone());
        expected.extend(v[d..2 * d].iter().map(|b| b.scale(&two)));
        expected.push(one_minus_2s);
        ensure(comp.images() == expected.as_slice(), || {
            format!("d={d}: degree composite")
        })?;

        let (urow, _) = universal_row(d + 1, Q).map_err(err)?;
        let phi = phi_map(&urow, false).map_err(err)?;
        ensure(phi.point.defect().is_zero(), || {
            format!("d={d}: phi point off the quadric")
        })?;
        let mut point_gens = phi.point.x.clone();
        point_gens.push(phi.point.z.clone());
        let equal = urow
            .parent()
            .ideals_equal(&urow.entries()[..d], &point_gens)
            .map_err(err)?;
        ensure(equal, || format!("d={d}: point ideal differs from J0"))?;
    }
    Ok(())
}

fn mennicke_newman_pairs(
    words: &mut Vec<(Arc<umrow_core::algebra::Algebra>, ElementaryWord)>,
) -> Check {
    let shrink = ShrinkConfig::default();
    let scalars = make_algebra::<&str>(Q, &[], &[]).map_err(err)?;
    let line = make_algebra(Q, &["t"], &[]).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut pairs = 0;
    for n in 2..=3 {
        for (parent, count) in [(&scalars, 30), (&line, 10)] {
            for _ in 0..count {
                let u = random_row(parent, n, 5, &mut rng).map_err(err)?;
                let v = random_row(parent, n, 5, &mut rng).map_err(err)?;
                let mn = mennicke_newman(&u, &v, &shrink).map_err(err)?;
                let bad = mennicke_postconditions(&u, &v, &mn);
                ensure(bad.is_empty(), || format!("{u} + {v}: {}", bad.join("; ")))?;
                words.push((parent.clone(), mn.eu));
                words.push((parent.clone(), mn.ev));
                pairs += 1;
            }
        }
    }
    ensure(pairs >= 50, || format!("only {pairs} pairs"))?;
    let vt = VTildeRing::new(4, Q).map_err(err)?;
    let (u, _) = vt.x_row().map_err(err)?;
    let (v, _) = vt.u_row().map_err(err)?;
    let mn = mennicke_newman(&u, &v, &shrink).map_err(err)?;
    let bad = mennicke_postconditions(&u, &v, &mn);
    ensure(bad.is_empty(), || {
        format!("universal pair: {}", bad.join("; "))
    })?;
    words.push((vt.algebra().clone(), mn.eu));
    words.push((vt.algebra().clone(), mn.ev));
    Ok(())
}

fn fold(words: &mut Vec<(Arc<umrow_core::algebra::Algebra>, ElementaryWord)>) -> Check {
    for n in [4, 5] {
        let vt = VTildeRing::new(n, Q).map_err(err)?;
        let folded = fold_model_row(&vt).map_err(err)?;
        ensure(
            folded.v.entries() == vt.expected_fold_row().as_slice(),
            || format!("n={n}: fold row"),
        )?;
        let x = vt.x();
        let one = vt.algebra().one();
        let witness = &(&(&one - &x[0]) * &(&one - &x[n - 1]))
            + &(&x[n - 1] + &(&(&one - &x[n - 1]) * &x[0]));
        ensure(witness.is_one(), || format!("n={n}: witness identity"))?;
        ensure(folded.witness.pairing().is_one(), || {
            format!("n={n}: stored witness")
        })?;
        let cert = fold_model_certificate(&vt).map_err(err)?;
        ensure(verify_certificate(&cert), || {
            format!("n={n}: certificate rejected")
        })?;
        for i in 0..cert.word.gens().len() {
            ensure(!verify_certificate(&tamper(&cert, i).map_err(err)?), || {
                format!("n={n}: tampered generator {i} still verifies")
            })?;
        }
        words.push((vt.algebra().clone(), folded.sum.mn.eu.clone()));
        words.push((vt.algebra().clone(), folded.sum.mn.ev.clone()));
        words.push((vt.algebra().clone(), cert.word));
    }
    Ok(())
}

/// Membership by brute force: for each `f`, solve `Σ c_j g_j = f` with every cofactor
/// monomial kept within total degree `bound`, by exact Gaussian elimination.
fn bounded_membership(
    gens: &[Polynomial],
    fs: &[Polynomial],
    bound: u32,
    field: FieldConfig,
) -> Vec<bool> {
    let nvars = gens[0].ring().nvars();
    let monomials = monomials_up_to(nvars, bound);
    let mut columns: Vec<BTreeMap<Vec<u32>, Scalar>> = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        for m in monomials
            .iter()
            .filter(|m| m.iter().sum::<u32>() + dg <= bound)
        {
            let mut col = BTreeMap::new();
            for (gm, c) in g.terms() {
                let e: Vec<u32> = gm.exponents().iter().zip(m).map(|(a, b)| a + b).collect();
                col.insert(e, c.clone());
            }
            columns.push(col);
        }
    }
    columns.extend(fs.iter().map(|f| {
        f.terms()
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
            .collect()
    }));
    let mut matrix: Vec<Vec<Scalar>> = monomials
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| c.get(r).cloned().unwrap_or(field.zero()))
                .collect()
        })
        .collect();
    let width = columns.len() - fs.len();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, p);
        let inv = matrix[rank][col].inverse().unwrap();
        let pivot: Vec<Scalar> = matrix[rank].iter().map(|x| x * &inv).collect();
        for (r, line) in matrix.iter_mut().enumerate() {
            if r != rank && !line[col].is_zero() {
                let factor = line[col].clone();
                for (x, p) in line.iter_mut().zip(&pivot).skip(col) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        matrix[rank] = pivot;
        rank += 1;
    }
    (0..fs.len())
        .map(|k| matrix[rank..].iter().all(|line| line[width + k].is_zero()))
        .collect()
}

fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let used: u32 = m.iter().sum();
                (0..=bound - used).map(move |e| {
                    let mut next = m.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    out
}

fn random_poly(ring: &Arc<PolyRing>, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let field = ring.field();
    let terms = (0..rng.gen_range(1..=4))
        .map(|_| {
            let mut left = degree;
            let exps: Vec<u32> = (0..ring.nvars())
                .map(|_| {
                    let e = rng.gen_range(0..=left);
                    left -= e;
                    e
                })
                .collect();
            (
                Monomial::from_exponents(exps),
                field.from_i64(rng.gen_range(-3..=3)),
            )
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

const FIXTURES: [(&[&str], &[&str]); 10] = [
    (&["x", "y"], &["x^2 - y", "x*y - 1"]),
    (
        &["x", "y", "z", "w"],
        &["x*z - y^2", "x*w - y*z", "y*w - z^2"],
    ),
    (&["x", "y"], &["x^2 + y^2 - 1", "x - y"]),
    (&["x", "y", "z"], &["x*y", "y*z", "z*x"]),
    (&["x", "y", "z"], &["x^3 - y*z", "y^2 - x"]),
    (&["x", "y", "z", "w"], &["x*y - z*w", "x + y + z + w - 1"]),
    (
        &["x", "y", "z", "w"],
        &["x^2*y - z", "x*y^2 - w", "z*w - 1"],
    ),
    (
        &["x", "y", "z"],
        &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
    ),
    (&["x", "y", "z"], &["x", "y^2 - 2*y", "x*y - z^3"]),
    (&["x", "y"], &["x*y - 1", "x^2"]),
];

fn groebner_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut decisions = 0;
    let (mut members, mut others) = (0, 0);
    for (vars, rels) in FIXTURES {
        let ring = PolyRing::new(Q, vars.iter().copied()).map_err(err)?;
        let gens: Vec<Polynomial> = rels
            .iter()
            .map(|r| parse_polynomial(&ring, r))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let ideal = Ideal::new(&ring, gens.clone()).map_err(err)?;
        let mut candidates: Vec<Polynomial> = gens.clone();
        for _ in 0..4 {
            let combo = gens.iter().fold(Polynomial::zero(&ring), |acc, g| {
                &acc + &(&random_poly(&ring, 1, &mut rng) * g)
            });
            candidates.push(combo);
        }
        for _ in 0..6 {
            candidates.push(random_poly(&ring, rng.gen_range(0..=3), &mut rng));
        }
        candidates.push(Polynomial::one(&ring));
        candidates.push(Polynomial::var(&ring, 0).pow(3));
        let oracle = bounded_membership(&gens, &candidates, 6, Q);
        for (f, by_oracle) in candidates.iter().zip(oracle) {
            let by_gb = ideal.contains(f).map_err(err)?;
            ensure(by_gb == by_oracle, || {
                format!(
                    "{rels:?}: {f} is {} by the basis, {} by the oracle",
                    by_gb, by_oracle
                )
            })?;
            decisions += 1;
            if by_gb {
                members += 1;
            } else {
                others += 1;
            }
        }
    }
    ensure(members > 0 && others > 0, || {
        "fixtures exercise only one answer".into()
    })?;
    ensure(decisions >= 100, || format!("only {decisions} decisions"))
}

fn determinants(words: &[(Arc<umrow_core::algebra::Algebra>, ElementaryWord)]) -> Check {
    ensure(!words.is_empty(), || "no words collected".into())?;
    for (parent, w) in words {
        let det = determinant(parent, &w.matrix(parent)).map_err(err)?;
        ensure(det.is_one(), || {
            format!("determinant {det} for a word of length {}", w.gens().len())
        })?;
    }
    Ok(())
}

fn cli_determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_umrow"))
            .args([
                "verify",
                "--suite",
                "all",
                "--n-min",
                "2",
                "--n-max",
                "4",
                "--field",
                "q",
                "--seed",
                "0",
                "--no-timing",
            ])
            .output()
            .map_err(err)
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0), || {
        format!("first run exited with {:?}", a.status.code())
    })?;
    ensure(b.status.code() == Some(0), || {
        format!("second run exited with {:?}", b.status.code())
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".into())
}

fn main() {
    let mut words = Vec::new();
    let mut failed = 0;
    let mut report = |index: usize, name: &str, budget: Duration, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || {
                format!("took {elapsed:?}, budget {budget:?}")
            })
        });
        match outcome {
            Ok(()) => println!(
                "criterion {index}: PASS  {name} ({} ms)",
                elapsed.as_millis()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {index}: FAIL  {name}: {why}");
            }
        }
    };
    report(
        1,
        "eta pulls back the even quadric relation",
        Duration::from_secs(10),
        &mut eta_relation,
    );
    report(
        2,
        "ideal equalities along eta",
        Duration::from_secs(30),
        &mut eta_ideals,
    );
    report(
        3,
        "mu, E and mu' identities",
        Duration::from_secs(20),
        &mut identities,
    );
    report(
        4,
        "delta, mu(-1), degree and phi",
        Duration::from_secs(30),
        &mut euler,
    );
    report(
        5,
        "Mennicke-Newman postconditions",
        Duration::from_secs(60),
        &mut || mennicke_newman_pairs(&mut words),
    );
    report(
        6,
        "fold model row and certificate",
        Duration::from_secs(120),
        &mut || fold(&mut words),
    );
    report(
        7,
        "Groebner membership against a linear-algebra oracle",
        Duration::from_secs(60),
        &mut groebner_oracle,
    );
    report(
        8,
        "every produced word has determinant one",
        Duration::from_secs(60),
        &mut || determinants(&words),
    );
    report(
        9,
        "CLI reports are byte-identical",
        Duration::from_secs(120),
        &mut cli_determinism,
    );
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
