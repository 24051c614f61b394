//! Exact base fields: the rationals and prime fields F_p.
//!
//! Every scalar is stored in canonical form (reduced fraction with positive
//! denominator, or residue in `[0, p)`), so equality of scalars is plain
//! structural equality and certificates re-verify bit-exactly.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// The base field K: either Q or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates that a `PrimeField` characteristic really is prime.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::Validation(format!("characteristic {p} is not prime")))
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Fp { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Fp { value: 1 % *p, p: *p },
        }
    }

    /// Embeds a signed integer into the field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { value: r, p: *p }
            }
        }
    }

    /// Parses a scalar from its canonical string form: "a/b" or "a" over Q,
    /// a decimal residue over F_p.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let (num_str, den_str) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num_str
                    .trim()
                    .parse()
                    .map_err(|_| Error::Validation(format!("bad rational numerator in {s:?}")))?;
                let den: BigInt = den_str
                    .trim()
                    .parse()
                    .map_err(|_| Error::Validation(format!("bad rational denominator in {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::Validation(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(BigRational::new(num, den)))
            }
            FieldSpec::PrimeField(p) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Validation(format!("bad residue {s:?} for F_{p}")))?;
                Ok(Scalar::Fp { value: v.rem_euclid(*p as i64) as u64, p: *p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. `BigRational` keeps fractions reduced with a
/// positive denominator; F_p residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, p } => *value == 1 % *p,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{} vs {}", self.field(), other.field())))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, .. }) => {
                Scalar::Fp { value: (a + b) % p, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, .. }) => {
                Scalar::Fp { value: (a + p - b) % p, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, .. }) => {
                // p fits in u32 territory for our catalog; use u128 to be safe.
                Scalar::Fp { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, p } => Scalar::Fp { value: (p - value) % p, p: *p },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Validation("division by zero".into()));
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { value, p } => {
                Scalar::Fp { value: mod_pow(*value, *p - 2, *p), p: *p }
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

// Oracle tests for exact scalars; cases are [TRIVIAL] field-arithmetic
// identities unless noted.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let f = FieldSpec::Rationals;
        let half = f.parse_scalar("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = f.parse_scalar("1/-2").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(f.parse_scalar("3/1").unwrap().to_string(), "3");
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Rationals;
        let a = f.parse_scalar("1/2").unwrap();
        let b = f.parse_scalar("2/3").unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "1/3");
        assert_eq!(a.add(&b).unwrap().to_string(), "7/6");
        assert_eq!(a.sub(&b).unwrap().to_string(), "-1/6");
        assert_eq!(a.div(&b).unwrap().to_string(), "3/4");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::PrimeField(5);
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a.mul(&b).unwrap(), f.from_i64(2));
        assert_eq!(a.add(&b).unwrap(), f.from_i64(2));
        assert_eq!(a.sub(&b).unwrap(), f.from_i64(4));
        assert_eq!(a.inv().unwrap(), f.from_i64(2));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(FieldSpec::PrimeField(4).validate().is_err());
        assert!(FieldSpec::PrimeField(2).validate().is_ok());
        assert!(FieldSpec::PrimeField(1).validate().is_err());
        assert!(FieldSpec::PrimeField(97).validate().is_ok());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = FieldSpec::Rationals.one();
        let b = FieldSpec::PrimeField(2).one();
        assert!(a.add(&b).is_err());
    }
}
