//! Exact coefficient fields.
//!
//! Arithmetic is exposed through a ring-object trait: a [`Field`] value (for
//! example "the rationals" or "GF(32003)") owns the operations and the
//! element type stays plain data.  This keeps `GF(p)` elements at a single
//! machine word for a run-time modulus and lets every algebraic structure in
//! the crate be generic over the coefficient field with no dynamic dispatch.
//!
//! No floating point exists anywhere downstream of this module.

use crate::rng::SplitMix64;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse.  Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// 0 for the rationals, `p` for `GF(p)`.
    fn characteristic(&self) -> u64;

    /// Deterministic sample used for generic coordinate changes.
    fn sample(&self, rng: &mut SplitMix64) -> Self::Elem;

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// The field of rationals with arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn sample(&self, rng: &mut SplitMix64) -> BigRational {
        // Small nonzero integers keep Buchberger runs over Q tractable while
        // still being generic with overwhelming probability.
        let n = 1 + rng.next_below(1 << 16) as i64;
        let sign = if rng.next_below(2) == 0 { 1 } else { -1 };
        self.from_i64(sign * n)
    }
    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }
}

/// A prime field `GF(p)` with a run-time modulus `p < 2^31`.
///
/// Elements are canonical representatives in `0..p`; display uses the
/// balanced representative (so `p - 1` prints as `-1`), which parses back to
/// the same element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

/// Default modulus: large enough that random coordinate changes behave
/// generically with overwhelming probability, small enough for single-word
/// arithmetic.
pub const DEFAULT_PRIME: u64 = 32003;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 2 || p >= (1 << 31) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return Err(FieldError::ModulusNotPrime(p));
            }
            d += 1;
        }
        Ok(PrimeField { p })
    }

    pub fn default_prime() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    ModulusOutOfRange(u64),
    ModulusNotPrime(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::ModulusOutOfRange(p) => {
                write!(f, "modulus {p} out of range (need 2 <= p < 2^31)")
            }
            FieldError::ModulusNotPrime(p) => write!(f, "modulus {p} is not prime"),
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p < 2^31 keeps the product inside u64.
        (a * b) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Extended Euclid on signed words.
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i64) as u64
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn sample(&self, rng: &mut SplitMix64) -> u64 {
        rng.next_below(self.p)
    }
    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *a > self.p / 2 {
            write!(f, "-{}", self.p - a)
        } else {
            write!(f, "{a}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms<F: Field>(field: &F, elems: &[F::Elem]) {
        for a in elems {
            assert_eq!(field.add(a, &field.zero()), *a);
            assert_eq!(field.mul(a, &field.one()), *a);
            assert!(field.is_zero(&field.sub(a, a)));
            assert!(field.is_zero(&field.add(a, &field.neg(a))));
            if !field.is_zero(a) {
                assert!(field.is_one(&field.mul(a, &field.inv(a))));
            }
            for b in elems {
                assert_eq!(field.add(a, b), field.add(b, a));
                assert_eq!(field.mul(a, b), field.mul(b, a));
                for c in elems {
                    assert_eq!(
                        field.mul(a, &field.add(b, c)),
                        field.add(&field.mul(a, b), &field.mul(a, c))
                    );
                    assert_eq!(
                        field.mul(&field.mul(a, b), c),
                        field.mul(a, &field.mul(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn rational_axioms() {
        let f = Rationals;
        let elems: alloc::vec::Vec<_> = [-3i64, -1, 0, 1, 2, 7]
            .iter()
            .map(|&n| f.from_i64(n))
            .chain([f.div(&f.from_i64(3), &f.from_i64(4))])
            .collect();
        axioms(&f, &elems);
    }

    #[test]
    fn prime_field_axioms() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut rng = SplitMix64::new(5);
        let mut elems: alloc::vec::Vec<u64> = (0..8).map(|_| f.sample(&mut rng)).collect();
        elems.push(0);
        elems.push(1);
        elems.push(DEFAULT_PRIME - 1);
        axioms(&f, &elems);
    }

    #[test]
    fn prime_field_inverses_small_modulus() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
    }
}
