//! Arithmetic in the coefficient field GF(p) for a word-sized odd prime p.
//!
//! Elements carry their characteristic, so mixing values from different
//! fields is caught as a usage error. The characteristic is restricted to
//! `2 < p < 2^31` so that products fit in 64-bit intermediates.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not an odd prime in (2, 2^31)")]
    NotPrime(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
}

/// The field context GF(p). Cheap to copy; one per computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds GF(p), rejecting composite or out-of-range characteristics.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces an integer into the canonical residue range [0, p).
    pub fn element(self, value: i64) -> FieldElement {
        let p = self.p as i64;
        let mut v = value % p;
        if v < 0 {
            v += p;
        }
        FieldElement {
            value: v as u32,
            p: self.p,
        }
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, p: self.p }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, p: self.p }
    }
}

/// A residue in [0, p). Immutable; safe to share across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    /// Returns `None` for zero.
    pub fn inverse(self) -> Option<FieldElement> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "characteristic must be prime");
        let p = self.p as i64;
        let mut t = t0 % p;
        if t < 0 {
            t += p;
        }
        Some(FieldElement {
            value: t as u32,
            p: self.p,
        })
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.p, rhs.p, "mixed field characteristics");
        let s = self.value as u64 + rhs.value as u64;
        let p = self.p as u64;
        FieldElement {
            value: (if s >= p { s - p } else { s }) as u32,
            p: self.p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.p, rhs.p, "mixed field characteristics");
        let p = self.p as u64;
        let s = self.value as u64 + p - rhs.value as u64;
        FieldElement {
            value: (if s >= p { s - p } else { s }) as u32,
            p: self.p,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.p, rhs.p, "mixed field characteristics");
        let prod = self.value as u64 * rhs.value as u64;
        FieldElement {
            value: (prod % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        if self.value == 0 {
            self
        } else {
            FieldElement {
                value: self.p - self.value,
                p: self.p,
            }
        }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: FieldElement) -> FieldElement {
        let inv = rhs.inverse().unwrap_or_else(|| {
            panic!("{}", FieldError::DivisionByZero(self.p));
        });
        self * inv
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn add_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!((f7.element(3) + f7.element(5)).value(), 1);
        assert_eq!((f7.element(0) + f7.element(4)).value(), 4);
        let f = PrimeField::new(32003).unwrap();
        assert_eq!((f.element(32002) + f.element(1)).value(), 0);
    }

    #[test]
    fn inverse_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.element(3).inverse().unwrap().value(), 5);
        assert_eq!(f7.element(1).inverse().unwrap().value(), 1);
        assert_eq!(f7.element(0).inverse(), None);
    }

    // Independent oracle: inverse by Fermat exponentiation a^(p-2).
    fn fermat_inverse(f: PrimeField, a: FieldElement) -> FieldElement {
        let mut acc = f.one();
        let mut base = a;
        let mut e = f.characteristic() - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    #[test]
    fn inverse_matches_fermat_oracle() {
        let f = PrimeField::new(32003).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let a = f.element(rng.gen_range(1..32003));
            let inv = a.inverse().unwrap();
            assert_eq!((a * inv).value(), 1);
            assert_eq!(inv, fermat_inverse(f, a));
        }
    }

    #[test]
    fn double_inverse_is_identity() {
        let f = PrimeField::new(32003).unwrap();
        for v in 1..500 {
            let a = f.element(v);
            assert_eq!(a.inverse().unwrap().inverse().unwrap(), a);
        }
    }

    #[test]
    fn field_axioms_sampled() {
        let f = PrimeField::new(32003).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..1000 {
            let a = f.element(rng.gen_range(0..32003));
            let b = f.element(rng.gen_range(0..32003));
            let c = f.element(rng.gen_range(0..32003));
            assert_eq!((a + b) + c, a + (b + c));
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!(a * (b + c), a * b + a * c);
            assert_eq!(a + (-a), f.zero());
            if !a.is_zero() {
                assert_eq!(a * a.inverse().unwrap(), f.one());
            }
        }
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(7).is_ok());
    }
}
