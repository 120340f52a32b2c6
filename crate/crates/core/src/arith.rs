//! Exact scalars: arbitrary-precision rationals and word-size prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields.
pub const MAX_MODULUS: u64 = (1 << 63) - 1;

/// The base field: either ℚ or 𝔽_p for a word-size prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawField", into = "RawField")]
pub enum FieldConfig {
    Rationals,
    PrimeField(u64),
}

#[derive(Serialize, Deserialize)]
enum RawField {
    Q,
    Fp(u64),
}

impl TryFrom<RawField> for FieldConfig {
    type Error = Error;

    fn try_from(raw: RawField) -> Result<Self> {
        match raw {
            RawField::Q => Ok(FieldConfig::Rationals),
            RawField::Fp(p) => FieldConfig::prime(p),
        }
    }
}

impl From<FieldConfig> for RawField {
    fn from(f: FieldConfig) -> Self {
        match f {
            FieldConfig::Rationals => RawField::Q,
            FieldConfig::PrimeField(p) => RawField::Fp(p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= p as u128 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldConfig {
    /// 𝔽_p, after checking that `p` is a prime below 2^63.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 63 bits")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldConfig::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Rationals => 0,
            FieldConfig::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldConfig::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldConfig::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Modular {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: *p,
                }
            }
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldConfig::Rationals => {
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldConfig::PrimeField(_) => {
                let d = self.from_bigint(den);
                Ok(self.from_bigint(num).mul(&d.inverse()?))
            }
        }
    }

    /// Parses `[+-]digits[/digits]`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let err = |message: &str| Error::Parse {
            offset: 0,
            message: format!("{message}: `{text}`"),
        };
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) || den.is_some_and(|d| !digits(d)) {
            return Err(err("invalid scalar literal"));
        }
        let mut n: BigInt = num.parse().map_err(|_| err("invalid integer"))?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err("invalid denominator"))?,
            None => BigInt::one(),
        };
        self.from_ratio(&n, &d)
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "Q"),
            FieldConfig::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of a [`FieldConfig`] in canonical form.
///
/// Rationals are kept reduced with a positive denominator; residues lie in `[0, p)`.
/// Equal values therefore have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

impl Scalar {
    pub fn field(&self) -> FieldConfig {
        match self {
            Scalar::Rational(_) => FieldConfig::Rationals,
            Scalar::Modular { modulus, .. } => FieldConfig::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    /// Exact `a op b`, rejecting operands from different fields.
    pub fn checked(&self, other: &Scalar, op: ScalarOp) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            ScalarOp::Add => self.add(other),
            ScalarOp::Sub => self.sub(other),
            ScalarOp::Mul => self.mul(other),
        })
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Modular { value, modulus } => Ok(Scalar::Modular {
                value: mod_inverse(*value, *modulus).ok_or(Error::DivisionByZero)?,
                modulus: *modulus,
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inverse()?))
    }
}

macro_rules! same_field {
    ($a:expr, $b:expr, $q:expr, $m:expr) => {
        match ($a, $b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational($q(x, y)),
            (
                Scalar::Modular {
                    value: x,
                    modulus: p,
                },
                Scalar::Modular {
                    value: y,
                    modulus: q,
                },
            ) if p == q => Scalar::Modular {
                value: $m(*x as u128, *y as u128, *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("scalar operands from different fields"),
        }
    };
}

fn mod_add(x: u128, y: u128, p: u128) -> u128 {
    (x + y) % p
}

fn mod_sub(x: u128, y: u128, p: u128) -> u128 {
    (x + p - y) % p
}

fn mod_mul(x: u128, y: u128, p: u128) -> u128 {
    (x * y) % p
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        same_field!(self, rhs, |x: &BigRational, y: &BigRational| x + y, mod_add)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        same_field!(self, rhs, |x: &BigRational, y: &BigRational| x - y, mod_sub)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        same_field!(self, rhs, |x: &BigRational, y: &BigRational| x * y, mod_mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}
