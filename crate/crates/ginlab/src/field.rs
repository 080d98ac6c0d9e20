//! Exact coefficient fields: arbitrary-precision rationals and word-size
//! prime fields.
//!
//! All arithmetic in this crate is exact; there is no floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The base field: ℚ or F_p with p prime, p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    PrimeField(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p as u64) {
            Ok(Field::PrimeField(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::zero()),
            Field::PrimeField(p) => Coeff::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::one()),
            Field::PrimeField(p) => Coeff::Fp { v: 1, p: *p },
        }
    }

    /// Embed a signed integer.
    pub fn from_i64(&self, k: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(k))),
            Field::PrimeField(p) => {
                let p64 = *p as i64;
                let v = k.rem_euclid(p64) as u64;
                Coeff::Fp { v, p: *p }
            }
        }
    }

    /// The fraction a/b; over F_p this is a·b⁻¹ and requires p ∤ b.
    pub fn from_fraction(&self, num: i64, den: u64) -> Result<Coeff> {
        if den == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::PrimeField(_) => {
                let d = self.from_i64(den as i64);
                if d.is_zero() {
                    return Err(Error::Domain(format!(
                        "denominator {den} vanishes in {self}"
                    )));
                }
                Ok(self.from_i64(num).mul(&d.inv()?))
            }
        }
    }

    /// Uniform field element: integer in [-pool, pool] over ℚ, uniform over F_p.
    pub fn random(&self, rng: &mut impl Rng, pool: i64) -> Coeff {
        match self {
            Field::Rationals => self.from_i64(rng.gen_range(-pool..=pool)),
            Field::PrimeField(p) => Coeff::Fp {
                v: rng.gen_range(0..*p as u64),
                p: *p,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// A field element. F_p values carry their modulus so arithmetic is
/// self-contained; mixing moduli is a bug and is asserted against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp { v: u64, p: u32 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rat(_) => Field::Rationals,
            Coeff::Fp { p, .. } => Field::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                Coeff::Fp {
                    v: (a + b) % (*p as u64),
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, rhs: &Coeff) -> Coeff {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Fp { v, p } => Coeff::Fp {
                v: if *v == 0 { 0 } else { *p as u64 - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                Coeff::Fp {
                    v: (a * b) % (*p as u64),
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        match self {
            Coeff::Rat(a) => Ok(Coeff::Rat(a.recip())),
            Coeff::Fp { v, p } => Ok(Coeff::Fp {
                v: mod_pow(*v, *p as u64 - 2, *p as u64),
                p: *p,
            }),
        }
    }

    pub fn div(&self, rhs: &Coeff) -> Result<Coeff> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Coeff {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base.clone());
            e >>= 1;
        }
        acc
    }

    /// Exact rational value; only valid over ℚ.
    pub fn as_rational(&self) -> &BigRational {
        match self {
            Coeff::Rat(r) => r,
            Coeff::Fp { .. } => panic!("not a rational coefficient"),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for n < 3,215,031,751.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        let mut r = d;
        while r != n - 1 {
            x = mod_pow(x, 2, n);
            r <<= 1;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sign of a rational: -1, 0, or 1.
pub fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a.add(&b), f5.from_i64(2));
        assert_eq!(a.mul(&b), f5.from_i64(2));
        assert_eq!(a.inv().unwrap(), f5.from_i64(2));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn rational_exactness() {
        let q = Field::Rationals;
        let third = q.from_fraction(1, 3).unwrap();
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
    }

    #[test]
    fn primality() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(32004).is_err());
    }

    #[test]
    fn fraction_over_prime_field() {
        let f7 = Field::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f7.from_fraction(1, 2).unwrap(), f7.from_i64(4));
        assert!(f7.from_fraction(1, 7).is_err());
    }
}
