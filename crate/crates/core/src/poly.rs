//! Sparse multivariate polynomials over a prime field.

use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial stored as a map from monomials to non-zero coefficients.
/// The zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: usize,
    modulus: u64,
    terms: BTreeMap<Monomial, FieldScalar>,
}

impl Polynomial {
    pub fn zero(vars: usize, modulus: u64) -> Self {
        Polynomial {
            vars,
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, modulus: u64, c: i64) -> Self {
        let mut p = Self::zero(vars, modulus);
        p.add_term(Monomial::one(vars), FieldScalar::new(c, modulus));
        p
    }

    pub fn variable(vars: usize, modulus: u64, v: usize) -> Self {
        let mut p = Self::zero(vars, modulus);
        p.add_term(Monomial::variable(vars, v), FieldScalar::one(modulus));
        p
    }

    pub fn from_monomial(vars: usize, modulus: u64, m: Monomial) -> Self {
        let mut p = Self::zero(vars, modulus);
        p.add_term(m, FieldScalar::one(modulus));
        p
    }

    /// Build from integer-coefficient terms given as (coefficient, pairs).
    pub fn from_terms(vars: usize, modulus: u64, terms: &[(i64, &[(usize, u32)])]) -> Self {
        let mut p = Self::zero(vars, modulus);
        for &(c, pairs) in terms {
            p.add_term(Monomial::from_pairs(vars, pairs), FieldScalar::new(c, modulus));
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldScalar {
        self.terms
            .get(m)
            .copied()
            .unwrap_or_else(|| FieldScalar::zero(self.modulus))
    }

    /// Add `c * m` into the polynomial, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: FieldScalar) {
        debug_assert_eq!(m.vars(), self.vars);
        debug_assert_eq!(c.modulus(), self.modulus);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The term greatest under `ord`. Errors on the zero polynomial.
    pub fn initial_term(&self, ord: &TermOrder) -> Result<(Monomial, FieldScalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
            .map(|(m, c)| (m.clone(), *c))
            .ok_or(Error::ZeroInitialTerm)
    }

    pub fn scale(&self, c: FieldScalar) -> Polynomial {
        let mut out = Polynomial::zero(self.vars, self.modulus);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), *a * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.vars, self.modulus);
        for (t, c) in &self.terms {
            out.terms.insert(t.mul(m), *c);
        }
        out
    }

    /// Leading-coefficient-one rescaling under `ord`; zero stays zero.
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.initial_term(ord) {
            Ok((_, c)) => self.scale(c.inv()),
            Err(_) => self.clone(),
        }
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(Monomial, FieldScalar)> {
        let mut v: Vec<(Monomial, FieldScalar)> =
            self.terms.iter().map(|(m, c)| (m.clone(), *c)).collect();
        v.sort_by(|(a, _), (b, _)| ord.compare(b, a));
        v
    }

    fn check_compat(&self, other: &Polynomial) {
        assert_eq!(self.vars, other.vars, "mixed variable counts");
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_compat(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_compat(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -*c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compat(rhs);
        let mut out = Polynomial::zero(self.vars, self.modulus);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), *ca * *cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(self.vars, self.modulus);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -*c);
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // print descending grevlex with coefficients in the symmetric range
        let ord = TermOrder::grevlex(self.vars);
        for (i, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let s = c.symmetric();
            let (sign, mag) = if s < 0 { ("-", -s) } else { ("+", s) };
            if i == 0 {
                if s < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_MODULUS;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const P: u64 = DEFAULT_MODULUS;

    fn x(v: usize) -> Polynomial {
        Polynomial::variable(3, P, v)
    }

    #[test]
    fn ring_ops_collect_and_cancel() {
        let f = x(1) + x(2);
        let g = x(1) - x(2);
        let prod = &f * &g;
        let expect = Polynomial::from_terms(3, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]);
        assert_eq!(prod, expect);
        assert!((&f - &f).is_zero());
        assert_eq!((&f + &g).num_terms(), 1);
    }

    #[test]
    fn initial_term_examples() {
        // lex picks x1^2 out of x1^2 - x2^2
        let f = Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]);
        let (m, _) = f.initial_term(&TermOrder::lex(2)).unwrap();
        assert_eq!(m, Monomial::from_pairs(2, &[(1, 2)]));

        // lex picks x1*x2 out of x1*x2 + x2^2
        let g = Polynomial::from_terms(2, P, &[(1, &[(1, 1), (2, 1)]), (1, &[(2, 2)])]);
        let (m, _) = g.initial_term(&TermOrder::lex(2)).unwrap();
        assert_eq!(m, Monomial::from_pairs(2, &[(1, 1), (2, 1)]));

        // grevlex in six variables picks x2*x5 out of x2*x5 - x1*x6
        let h = Polynomial::from_terms(6, P, &[(1, &[(2, 1), (5, 1)]), (-1, &[(1, 1), (6, 1)])]);
        let (m, _) = h.initial_term(&TermOrder::grevlex(6)).unwrap();
        assert_eq!(m, Monomial::from_pairs(6, &[(2, 1), (5, 1)]));

        assert_eq!(
            Polynomial::zero(2, P).initial_term(&TermOrder::lex(2)),
            Err(crate::error::Error::ZeroInitialTerm)
        );
    }

    #[test]
    fn initial_term_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let orders = [TermOrder::lex(3), TermOrder::grevlex(3)];
        for trial in 0..50 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let mut p = Polynomial::zero(3, P);
                for _ in 0..rng.gen_range(1..5) {
                    let m = Monomial::from_exponents(
                        (0..3).map(|_| rng.gen_range(0..4)).collect(),
                    );
                    p.add_term(m, FieldScalar::new(rng.gen_range(1..P as i64), P));
                }
                p
            };
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let ord = &orders[trial % 2];
            let (mf, cf) = f.initial_term(ord).unwrap();
            let (mg, cg) = g.initial_term(ord).unwrap();
            let (mp, cp) = (&f * &g).initial_term(ord).unwrap();
            assert_eq!(mp, mf.mul(&mg));
            assert_eq!(cp, cf * cg);
        }
    }

    #[test]
    fn display_symmetric_coefficients() {
        let f = Polynomial::from_terms(3, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)]), (3, &[])]);
        assert_eq!(f.to_string(), "x1^2 - x2^2 + 3");
    }

    #[test]
    fn homogeneity() {
        let f = Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]);
        assert!(f.is_homogeneous());
        let g = Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (1, &[(2, 1)])]);
        assert!(!g.is_homogeneous());
        assert!(Polynomial::zero(2, P).is_homogeneous());
    }
}
