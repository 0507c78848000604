//! Monomials as exponent vectors of fixed length.

use std::fmt;

/// A monomial in a polynomial ring with a fixed number of variables.
/// Variables are indexed 1..=m in the public API.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial {
            exps: vec![0; vars],
        }
    }

    /// Monomial from (variable, exponent) pairs, 1-based variables.
    pub fn from_pairs(vars: usize, pairs: &[(usize, u32)]) -> Self {
        let mut exps = vec![0; vars];
        for &(v, e) in pairs {
            assert!(v >= 1 && v <= vars, "variable index out of range");
            exps[v - 1] += e;
        }
        Monomial { exps }
    }

    pub fn variable(vars: usize, v: usize) -> Self {
        Self::from_pairs(vars, &[(v, 1)])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-based variable `v`.
    pub fn exponent(&self, v: usize) -> u32 {
        self.exps[v - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a.min(b) == &0)
    }

    /// Truncate to the first `vars` variables; the dropped exponents must be zero.
    pub fn restrict(&self, vars: usize) -> Monomial {
        debug_assert!(self.exps[vars..].iter().all(|&e| e == 0));
        Monomial {
            exps: self.exps[..vars].to_vec(),
        }
    }

    /// Extend with zero exponents up to `vars` variables.
    pub fn extend(&self, vars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(vars, 0);
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let m = Monomial::from_pairs(3, &[(1, 2), (2, 1)]);
        let d = Monomial::from_pairs(3, &[(1, 1)]);
        assert!(d.divides(&m));
        assert!(!m.divides(&d));
        assert_eq!(m.div(&d), Monomial::from_pairs(3, &[(1, 1), (2, 1)]));
        assert_eq!(m.degree(), 3);
        assert_eq!(m.support(), vec![1, 2]);
    }

    #[test]
    fn lcm_gcd() {
        let a = Monomial::from_pairs(2, &[(1, 2)]);
        let b = Monomial::from_pairs(2, &[(1, 1), (2, 1)]);
        assert_eq!(a.lcm(&b), Monomial::from_pairs(2, &[(1, 2), (2, 1)]));
        assert_eq!(a.gcd(&b), Monomial::from_pairs(2, &[(1, 1)]));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::variable(2, 1).is_coprime(&Monomial::variable(2, 2)));
    }

    #[test]
    fn display() {
        let m = Monomial::from_pairs(4, &[(1, 1), (4, 2)]);
        assert_eq!(m.to_string(), "x1*x4^2");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }
}
