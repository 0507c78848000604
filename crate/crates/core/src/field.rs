//! Exact arithmetic in a prime field Z/p.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Default coefficient field modulus. Large enough that seeded random
/// choices behave like generic ones on desk-scale inputs.
pub const DEFAULT_MODULUS: u64 = 32003;

/// An element of Z/p for a prime p carried alongside the residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldScalar {
    value: u64,
    modulus: u64,
}

impl FieldScalar {
    pub fn new(value: i64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        FieldScalar {
            value: v as u64,
            modulus,
        }
    }

    pub fn from_residue(value: u64, modulus: u64) -> Self {
        FieldScalar {
            value: value % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        FieldScalar { value: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        FieldScalar {
            value: 1 % modulus,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Residue lifted to the symmetric range (-p/2, p/2].
    pub fn symmetric(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    pub fn inv(&self) -> FieldScalar {
        assert!(!self.is_zero(), "division by zero in field");
        // extended Euclid
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus is not prime or value not invertible");
        FieldScalar::new(s0 as i64, self.modulus)
    }

    pub fn pow(&self, mut e: u64) -> FieldScalar {
        let mut base = *self;
        let mut acc = FieldScalar::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    fn check(&self, other: &FieldScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in field arithmetic"
        );
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: FieldScalar) -> FieldScalar {
        self.check(&rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus {
            v -= self.modulus;
        }
        FieldScalar {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: FieldScalar) -> FieldScalar {
        self.check(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        FieldScalar {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: FieldScalar) -> FieldScalar {
        self.check(&rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        FieldScalar {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl Div for FieldScalar {
    type Output = FieldScalar;
    fn div(self, rhs: FieldScalar) -> FieldScalar {
        self * rhs.inv()
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        if self.value == 0 {
            self
        } else {
            FieldScalar {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
}

impl AddAssign for FieldScalar {
    fn add_assign(&mut self, rhs: FieldScalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldScalar {
    fn sub_assign(&mut self, rhs: FieldScalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldScalar {
    fn mul_assign(&mut self, rhs: FieldScalar) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Deterministic primality check by trial division; inputs are small
/// configuration values, not cryptographic material.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_default() {
        let p = DEFAULT_MODULUS;
        let a = FieldScalar::new(-1, p);
        assert_eq!(a.residue(), p - 1);
        assert_eq!(a.symmetric(), -1);
        let b = FieldScalar::new(2, p);
        assert_eq!((a + b).residue(), 1);
        assert_eq!((a * a).residue(), 1);
        assert_eq!((b * b.inv()).residue(), 1);
        assert_eq!(b.pow(p - 1).residue(), 1);
    }

    #[test]
    fn inverse_every_nonzero_small_prime() {
        for v in 1..7 {
            let x = FieldScalar::new(v, 7);
            assert_eq!((x * x.inv()).residue(), 1);
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(is_prime(DEFAULT_MODULUS));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
