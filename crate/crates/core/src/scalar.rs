//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every algebra fixes one field for all of its linear algebra. Scalars are
//! plain values; mixing scalars from different fields is a programming error
//! and panics, since it can only arise from an engine bug, never from user
//! input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// Integers modulo a prime.
    Prime(u64),
}

impl Field {
    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Fp { value: 1 % p, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { value: r, modulus: *p }
            }
        }
    }

    /// Fraction n/d. Over a prime field this is n * d^-1; d must not be
    /// divisible by the modulus.
    pub fn fraction(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        match self {
            Field::Rationals => {
                Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            Field::Prime(_) => {
                let den = self.from_i64(d);
                assert!(!den.is_zero(), "denominator divisible by field characteristic");
                self.from_i64(n).mul(&den.inverse())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, modulus } => *value == 1 % *modulus,
        }
    }

    /// Negative in the rational sense; prime-field values are kept
    /// canonical in 0..p and never count as negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r < &num_rational::BigRational::zero(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                Scalar::Fp { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                // Moduli fit in 32 bits in practice, but use u128 to be safe.
                let prod = (*a as u128 * *b as u128 % *p as u128) as u64;
                Scalar::Fp { value: prod, modulus: *p }
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn inverse(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { value, modulus } => {
                Scalar::Fp { value: mod_inverse(*value, *modulus), modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inverse())
    }
}

/// Inverse of a mod p via extended Euclid. a must be nonzero mod p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "element not invertible mod p");
    old_s.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rationals;
        let third = q.fraction(1, 3);
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
        let x = q.fraction(2, 4);
        assert_eq!(x, q.fraction(1, 2));
        assert_eq!(x.to_string(), "1/2");
        assert_eq!(q.from_i64(-7).to_string(), "-7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::Prime(5);
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a.mul(&b), f5.from_i64(2));
        assert_eq!(a.add(&b), f5.from_i64(2));
        assert_eq!(a.neg(), f5.from_i64(2));
        assert!(a.mul(&a.inverse()).is_one());
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        assert_eq!(f5.fraction(1, 2), f5.from_i64(3));
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let a = Field::Rationals.one();
        let b = Field::Prime(2).one();
        let _ = a.add(&b);
    }
}
