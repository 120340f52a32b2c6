use num_bigint::BigInt;
use proptest::prelude::*;
use umrow_core::arith::ScalarOp;
use umrow_core::{Error, FieldConfig, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| {
        FieldConfig::Rationals
            .from_ratio(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    })
}

fn residue(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p as i64).prop_map(move |v| FieldConfig::PrimeField(p).from_i64(v))
}

fn axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(&(a - b) + b, *a);
    assert!((a + &(-a)).is_zero());
    if !a.is_zero() {
        assert!((a * &a.inverse().unwrap()).is_one());
    } else {
        assert_eq!(a.inverse().unwrap_err(), Error::DivisionByZero);
    }
}

proptest! {
    #[test]
    fn rationals(a in rational(), b in rational(), c in rational()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn f7(a in residue(7), b in residue(7), c in residue(7)) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn large_prime(a in residue(1_000_000_007), b in residue(1_000_000_007), c in residue(1_000_000_007)) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn canonical_form(n in -40i64..40, d in 1i64..20, k in 1i64..9) {
        let q = FieldConfig::Rationals;
        let a = q.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap();
        let b = q.from_ratio(&BigInt::from(n * k), &BigInt::from(d * k)).unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn spec_examples() {
    let q = FieldConfig::Rationals;
    let half = q.parse_scalar("1/2").unwrap();
    let third = q.parse_scalar("1/3").unwrap();
    assert_eq!((&half + &third).to_string(), "5/6");
    assert_eq!(q.parse_scalar("2/4").unwrap().to_string(), "1/2");
    assert_eq!(
        q.parse_scalar("3/7")
            .unwrap()
            .inverse()
            .unwrap()
            .to_string(),
        "7/3"
    );
    assert!(q.one().inverse().unwrap().is_one());

    let f5 = FieldConfig::prime(5).unwrap();
    assert_eq!((&f5.from_i64(3) * &f5.from_i64(4)).to_string(), "2");
    let f7 = FieldConfig::prime(7).unwrap();
    assert_eq!(f7.from_i64(3).inverse().unwrap().to_string(), "5");

    assert_eq!(
        half.checked(&f5.one(), ScalarOp::Add).unwrap_err(),
        Error::FieldMismatch
    );
    assert!(matches!(FieldConfig::prime(9), Err(Error::InvalidField(_))));
}
