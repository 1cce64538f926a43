//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! A [`FieldSpec`] names the coefficient field, and a [`Scalar`] is an
//! element of some field in canonical form: a reduced fraction with positive
//! denominator, or a residue in `[0, p)`. Structural equality on `Scalar` is
//! field equality.

pub mod gf2;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_MODULUS: u32 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rationals,
    Prime(u32),
}

/// The coefficient field: `Q` or `F_p` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// The prime field `F_p`. Fails unless `p` is a prime below `2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidArgument(format!(
                "modulus {p} must be below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    /// 0 for `Q`, `p` for `F_p`.
    pub fn characteristic(&self) -> u32 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(n.into()))),
            Kind::Prime(p) => Scalar::residue(n.rem_euclid(p as i64) as u32, p),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            Kind::Prime(p) => {
                let r = n % BigInt::from(p);
                let r = if r.is_negative() {
                    r + BigInt::from(p)
                } else {
                    r
                };
                Scalar::residue(r.to_u32().expect("residue below 2^31"), p)
            }
        }
    }

    /// `num / den` as a field element; `den` must be nonzero in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self.0 {
            Kind::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Repr::Rational(BigRational::new(
                    num.clone(),
                    den.clone(),
                ))))
            }
            Kind::Prime(_) => self.from_bigint(num).div(&self.from_bigint(den)),
        }
    }

    /// Maps `s` into this field. Integers embed in every field; residues and
    /// non-integral rationals only belong to their own field.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (&s.0, self.0) {
            (Repr::Rational(_), Kind::Rationals) => Ok(s.clone()),
            (Repr::Rational(q), Kind::Prime(_)) if q.is_integer() => {
                Ok(self.from_bigint(q.numer()))
            }
            (Repr::Residue { modulus, .. }, Kind::Prime(p)) if *modulus == p => Ok(s.clone()),
            _ => Err(Error::mismatch(*self, s.field())),
        }
    }

    /// All elements of a prime field in residue order, or `None` over `Q`.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |v| Scalar::residue(v, p)))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts the tokens `Q` and `F<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::rationals());
        }
        let p = s
            .strip_prefix('F')
            .and_then(|rest| rest.parse::<u32>().ok())
            .ok_or_else(|| {
                Error::InvalidArgument(format!("unknown field token {s:?}, expected Q or F<p>"))
            })?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

/// A field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar(Repr::Rational(q))
    }
}

impl Scalar {
    pub(crate) fn residue(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational(_) => FieldSpec::rationals(),
            Repr::Residue { modulus, .. } => FieldSpec(Kind::Prime(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u32> {
        match self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(value),
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        res: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Result<Scalar> {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Scalar(Repr::Rational(rat(a, b)))),
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let v = res(*a as u64, *b as u64, *p as u64);
                Ok(Scalar::residue(v as u32, *p))
            }
            _ => Err(Error::mismatch(self.field(), other.field())),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a + b, |a, b, p| (a + b) % p)
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, |a, b| a * b, |a, b, p| (a * b) % p)
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(Error::mismatch(self.field(), other.field()));
        }
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
            Repr::Residue { value, modulus } => {
                Scalar::residue((modulus - value) % modulus, *modulus)
            }
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => {
                Scalar::residue(inv_mod(*value as u64, *modulus as u64) as u32, *modulus)
            }
        })
    }
}

/// Inverse of a nonzero residue modulo a prime, by Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on mixed fields; use the checked methods when the
// operands come from untrusted input.
macro_rules! checked_op {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs).expect("scalar operands from different fields")
            }
        }
    };
}

checked_op!(Add, add);
checked_op!(Sub, sub);
checked_op!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
