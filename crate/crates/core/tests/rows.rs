use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use umrow_core::algebra::{make_algebra, Algebra, AlgebraElement};
use umrow_core::rows::{
    determinant, macro_expand, mennicke_newman, vdk_add, verify_certificate, ElementaryGen,
    ElementaryWord, MennickeNewman, MoveMacro, OrbitCertificate, ShrinkConfig, UnimodularRow,
};
use umrow_core::{Error, FieldConfig};

const Q: FieldConfig = FieldConfig::Rationals;

fn line() -> Arc<Algebra> {
    make_algebra(Q, &["t"], &[]).unwrap()
}

fn word_from(parent: &Arc<Algebra>, n: usize, raw: &[(usize, usize, i64, i64)]) -> ElementaryWord {
    let t = if parent.nvars() > 0 {
        parent.var_at(0)
    } else {
        parent.zero()
    };
    let mut w = ElementaryWord::empty(n);
    for &(i, j, c0, c1) in raw {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let lambda = &parent.from_i64(c0) + &t.scale(&Q.from_i64(c1));
        w.push(ElementaryGen::new(i, j, lambda).unwrap()).unwrap();
    }
    w
}

fn raw_word() -> impl Strategy<Value = Vec<(usize, usize, i64, i64)>> {
    proptest::collection::vec((0usize..4, 0usize..4, -3i64..=3, -2i64..=2), 0..8)
}

fn random_row(parent: &Arc<Algebra>, n: usize, rng: &mut ChaCha8Rng) -> UnimodularRow {
    let raw: Vec<(usize, usize, i64, i64)> = (0..4)
        .map(|_| {
            let i = rng.gen_range(0..n);
            (
                i,
                (i + rng.gen_range(1..n)) % n,
                rng.gen_range(-3..=3),
                rng.gen_range(-1..=1),
            )
        })
        .collect();
    UnimodularRow::base_row(parent, n)
        .unwrap()
        .apply(&word_from(parent, n, &raw))
        .unwrap()
}

/// Replays the construction's postconditions independently of the procedure.
fn assert_postconditions(u: &UnimodularRow, v: &UnimodularRow, mn: &MennickeNewman) {
    let parent = u.parent();
    let fu = u.apply(&mn.eu).unwrap();
    let fv = v.apply(&mn.ev).unwrap();
    assert_eq!(fu.entries()[0], mn.x);
    assert_eq!(fv.entries()[0], &parent.one() - &mn.x);
    assert_eq!(fu.entries()[1..], mn.a[..]);
    assert_eq!(fv.entries()[1..], mn.a[..]);
    assert!(fu.reverify().is_ok() && fv.reverify().is_ok());
    for i in 1..u.len() {
        let d = &mn.u2[i] - &mn.v2[i];
        assert_eq!(&mn.u2[i] - &(&mn.u2[0] * &d), mn.a[i - 1]);
        assert_eq!(&mn.v2[i] + &(&mn.v2[0] * &d), mn.a[i - 1]);
    }
    for w in [&mn.eu, &mn.ev] {
        assert!(determinant(parent, &w.matrix(parent)).unwrap().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_have_determinant_one(n in 2usize..5, raw in raw_word()) {
        let k = line();
        let w = word_from(&k, n, &raw);
        prop_assert!(determinant(&k, &w.matrix(&k)).unwrap().is_one());
    }

    #[test]
    fn action_is_compatible(n in 2usize..5, a in raw_word(), b in raw_word(), seed in 0u64..1000) {
        let k = line();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let row = random_row(&k, n, &mut rng);
        let (w1, w2) = (word_from(&k, n, &a), word_from(&k, n, &b));
        let both = row.apply(&w1.concat(&w2).unwrap()).unwrap();
        let stepwise = row.apply(&w1).unwrap().apply(&w2).unwrap();
        prop_assert_eq!(both.entries(), stepwise.entries());
        // Row times matrix agrees with the action.
        let m = w1.matrix(&k);
        let by_matrix: Vec<AlgebraElement> = (0..n)
            .map(|j| (0..n).fold(k.zero(), |acc, i| &acc + &(&row.entries()[i] * &m[i][j])))
            .collect();
        let moved = row.apply(&w1).unwrap();
        prop_assert_eq!(moved.entries(), by_matrix.as_slice());
        let back = moved.apply(&w1.inverse()).unwrap();
        prop_assert_eq!(back.entries(), row.entries());
        prop_assert!(moved.reverify().is_ok());
    }

    #[test]
    fn splittings_pair_to_one(n in 2usize..5, seed in 0u64..1000) {
        let k = line();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let row = random_row(&k, n, &mut rng);
        prop_assert!(row.splitting().unwrap().pairing().is_one());
    }

    #[test]
    fn mennicke_newman_on_random_pairs(n in 2usize..4, seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for parent in [make_algebra::<&str>(Q, &[], &[]).unwrap(), line()] {
            let u = random_row(&parent, n, &mut rng);
            let v = random_row(&parent, n, &mut rng);
            let mn = mennicke_newman(&u, &v, &ShrinkConfig::default()).unwrap();
            assert_postconditions(&u, &v, &mn);
        }
    }
}

#[test]
fn unimodularity_examples() {
    let sphere = make_algebra(Q, &["x", "y", "z"], &["x^2+y^2+z^2-1"]).unwrap();
    let row = UnimodularRow::parse(&sphere, &["x", "y", "z"]).unwrap();
    assert!(row.is_verified());
    assert!(row.splitting().unwrap().pairing().is_one());
    assert!(UnimodularRow::base_row(&sphere, 4).unwrap().is_verified());
    let plane = make_algebra(Q, &["x", "y"], &[]).unwrap();
    assert_eq!(
        UnimodularRow::parse(&plane, &["x", "y"]).unwrap_err(),
        Error::NotUnimodular
    );
    let q = make_algebra::<&str>(Q, &[], &[]).unwrap();
    assert!(UnimodularRow::parse(&q, &["2", "3"])
        .unwrap()
        .splitting()
        .unwrap()
        .pairing()
        .is_one());
    let one_f = UnimodularRow::parse(&plane, &["1", "x*y"]).unwrap();
    assert!(one_f.splitting().unwrap().pairing().is_one());
    let w = ElementaryWord::empty(3);
    assert!(matches!(one_f.apply(&w), Err(Error::ShapeError(_))));
}

#[test]
fn macros_match_their_declared_moves() {
    let k = make_algebra(Q, &["p", "q", "a", "c", "u", "w"], &["u*w - 1 - c*a"]).unwrap();
    let e = |s: &str| k.parse(s).unwrap();
    let row = vec![e("p"), e("q"), e("a")];

    let swap = macro_expand(&MoveMacro::SwapSign { i: 0, j: 1 }, 3, &k).unwrap();
    assert_eq!(swap.gens().len(), 3);
    assert_eq!(swap.apply(&row).unwrap(), vec![-&e("q"), e("p"), e("a")]);

    let add = MoveMacro::Add {
        i: 2,
        j: 0,
        lambda: e("c"),
    };
    let w = macro_expand(&add, 3, &k).unwrap();
    assert_eq!(w.gens().len(), 1);
    assert_eq!(w.apply(&row).unwrap()[0], e("p + c*a"));

    let white = MoveMacro::WhiteheadModCoordinate {
        i: 0,
        j: 1,
        pivot: 2,
        pivot_value: e("a"),
        u: e("u"),
        w: e("w"),
        c: e("c"),
    };
    let out = macro_expand(&white, 3, &k).unwrap().apply(&row).unwrap();
    assert_eq!(out[0], e("w*p - a*c*(w*p + q)"));
    assert_eq!(out[1], e("u*q + a*c*p"));
    assert_eq!(out[2], e("a"));

    let bad = MoveMacro::WhiteheadModCoordinate {
        i: 0,
        j: 1,
        pivot: 2,
        pivot_value: e("a"),
        u: e("u"),
        w: e("w"),
        c: e("2*c"),
    };
    assert!(matches!(
        macro_expand(&bad, 3, &k),
        Err(Error::BadCertificate(_))
    ));
}

#[test]
fn rational_pair_and_sum() {
    let q = make_algebra::<&str>(Q, &[], &[]).unwrap();
    let u = UnimodularRow::parse(&q, &["2", "3"]).unwrap();
    let v = UnimodularRow::parse(&q, &["5", "7"]).unwrap();
    let mn = mennicke_newman(&u, &v, &ShrinkConfig::default()).unwrap();
    assert!(mn.shrink.is_none());
    assert_postconditions(&u, &v, &mn);
    let s = vdk_add(&u, &v, &ShrinkConfig::default()).unwrap();
    assert_eq!(s.sum.entries()[0], &mn.x * &(&q.one() - &mn.x));
    assert_eq!(s.sum.entries()[1], mn.a[0]);
    assert!(s.sum.reverify().is_ok());

    let cert = OrbitCertificate {
        from: u.clone(),
        to: u.apply(&mn.eu).unwrap(),
        word: mn.eu.clone(),
    };
    assert!(verify_certificate(&cert));
    let mut gens = mn.eu.gens().to_vec();
    gens[0].lambda = &gens[0].lambda + &q.one();
    let tampered = OrbitCertificate {
        word: ElementaryWord::new(2, gens).unwrap(),
        ..cert.clone()
    };
    assert!(!verify_certificate(&tampered));
    let trivial = OrbitCertificate {
        from: u.clone(),
        to: u.clone(),
        word: ElementaryWord::empty(2),
    };
    assert!(verify_certificate(&trivial));
}

#[test]
fn shrink_step() {
    let q = make_algebra::<&str>(Q, &[], &[]).unwrap();
    let u = UnimodularRow::parse(&q, &["1", "0"]).unwrap();
    let mn = mennicke_newman(&u, &u, &ShrinkConfig::default()).unwrap();
    assert_eq!(mn.shrink, Some(vec![q.one(), q.one()]));
    assert_eq!(mn.u1, vec![q.one(), q.one()]);
    assert_postconditions(&u, &u, &mn);

    let hinted = ShrinkConfig {
        hints: Some(vec![q.from_i64(2), q.from_i64(3)]),
        ..ShrinkConfig::default()
    };
    let mn = mennicke_newman(&u, &u, &hinted).unwrap();
    assert_eq!(mn.shrink, Some(vec![q.from_i64(2), q.from_i64(3)]));
    assert_postconditions(&u, &u, &mn);

    // Over the zero-dimensional ring with only a tiny budget, the search gives up.
    let tiny = ShrinkConfig {
        budget: 1,
        ..ShrinkConfig::default()
    };
    assert_eq!(
        mennicke_newman(&u, &u, &tiny).unwrap_err(),
        Error::ShrinkFailed { budget: 1 }
    );
}
