//! Coefficient rings: the integers, the rationals, and modular integers
//! `Z/m` for arbitrary `m >= 2`.
//!
//! The ring decides which integers are units, and that single predicate
//! drives every matching built elsewhere in the crate.  Scalar values are
//! exact: see [`crate::matrix::Scalar`].

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::matrix::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    /// Residues modulo the stored modulus (>= 2, not necessarily prime).
    ModularIntegers(u64),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{k} is not a unit in {ring}")]
    NonUnit { k: String, ring: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("unrecognized ring selector {0:?} (expected \"Z\", \"Q\", or \"Z/<m>\")")]
    BadSelector(String),
}

impl std::fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::ModularIntegers(m) => write!(f, "Z/{m}"),
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl CoefficientRing {
    pub fn modular(m: u64) -> Result<Self, RingError> {
        if m < 2 {
            return Err(RingError::BadModulus(m));
        }
        Ok(CoefficientRing::ModularIntegers(m))
    }

    /// Parse a ring selector: `"Z"`, `"Q"`, or `"Z/<m>"`.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            t => {
                if let Some(m) = t.strip_prefix("Z/") {
                    let m: u64 = m.parse().map_err(|_| RingError::BadSelector(s.into()))?;
                    Self::modular(m)
                } else {
                    Err(RingError::BadSelector(s.into()))
                }
            }
        }
    }

    /// Is the image of the integer `k` invertible in this ring?
    pub fn is_integer_unit(&self, k: i64) -> bool {
        match self {
            CoefficientRing::Integers => k == 1 || k == -1,
            CoefficientRing::Rationals => k != 0,
            CoefficientRing::ModularIntegers(m) => {
                let r = k.rem_euclid(*m as i64) as u64;
                gcd_u64(r, *m) == 1
            }
        }
    }

    /// Inverse of the image of `k`, as a canonical scalar.
    pub fn invert_integer(&self, k: i64) -> Result<Scalar, RingError> {
        if !self.is_integer_unit(k) {
            return Err(RingError::NonUnit {
                k: k.to_string(),
                ring: self.to_string(),
            });
        }
        match self {
            CoefficientRing::Integers => Ok(Scalar::from_integer(BigInt::from(k))),
            CoefficientRing::Rationals => {
                Ok(BigRational::new(BigInt::one(), BigInt::from(k)))
            }
            CoefficientRing::ModularIntegers(m) => {
                let r = k.rem_euclid(*m as i64) as u64;
                Ok(Scalar::from_integer(BigInt::from(mod_inverse(r, *m))))
            }
        }
    }

    /// Is a canonical scalar a unit?
    pub fn is_unit(&self, s: &Scalar) -> bool {
        match self {
            CoefficientRing::Integers => s.is_integer() && s.numer().magnitude().is_one(),
            CoefficientRing::Rationals => !s.is_zero(),
            CoefficientRing::ModularIntegers(m) => {
                debug_assert!(s.is_integer());
                let r: u64 = (s.numer() % m).magnitude().try_into().unwrap();
                gcd_u64(r, *m) == 1
            }
        }
    }

    /// Bring a scalar to canonical form.  For `Z/m` this reduces the value
    /// into `0..m` (the value must be integral); the other rings rely on
    /// the normalization already performed by rational arithmetic.
    pub fn canon(&self, s: Scalar) -> Scalar {
        match self {
            CoefficientRing::Integers | CoefficientRing::Rationals => s,
            CoefficientRing::ModularIntegers(m) => {
                assert!(s.is_integer(), "modular scalar with nontrivial denominator");
                let m = BigInt::from(*m);
                let mut r = s.numer() % &m;
                if r.is_negative() {
                    r += &m;
                }
                Scalar::from_integer(r)
            }
        }
    }

    pub fn scalar_from_i64(&self, k: i64) -> Scalar {
        self.canon(Scalar::from_integer(BigInt::from(k)))
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.canon(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.canon(-a)
    }

    /// Inverse of a canonical scalar.
    pub fn invert(&self, s: &Scalar) -> Result<Scalar, RingError> {
        let non_unit = || RingError::NonUnit {
            k: s.to_string(),
            ring: self.to_string(),
        };
        match self {
            CoefficientRing::Integers => {
                if self.is_unit(s) {
                    Ok(s.clone())
                } else {
                    Err(non_unit())
                }
            }
            CoefficientRing::Rationals => {
                if s.is_zero() {
                    Err(non_unit())
                } else {
                    Ok(s.recip())
                }
            }
            CoefficientRing::ModularIntegers(m) => {
                if !self.is_unit(s) {
                    return Err(non_unit());
                }
                let r: u64 = (s.numer() % m).magnitude().try_into().unwrap();
                Ok(Scalar::from_integer(BigInt::from(mod_inverse(r, *m))))
            }
        }
    }

    /// `Some(p)` when the ring is a field of prime characteristic `p`.
    pub fn prime_modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::ModularIntegers(m) if is_prime_u64(*m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, CoefficientRing::Rationals) || self.prime_modulus().is_some()
    }

    /// Characteristic of the ring: 0 for `Z` and `Q`, `m` for `Z/m`.
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientRing::Integers | CoefficientRing::Rationals => 0,
            CoefficientRing::ModularIntegers(m) => *m,
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // Extended Euclid on i128; caller guarantees gcd(a, m) = 1.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

pub fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m.is_multiple_of(2) {
        return m == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|sq| sq <= m).unwrap_or(false) {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
