//! Ideals of the polynomial ring, given by finite generating sets.

use crate::error::{Error, Result};
use crate::groebner;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::fmt;

/// An ideal presented by a list of non-zero generators. The empty list is
/// the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    vars: usize,
    modulus: u64,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: usize, modulus: u64, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(!g.is_zero(), "zero generator");
            assert_eq!(g.vars(), vars, "generator in the wrong ring");
            assert_eq!(g.modulus(), modulus, "generator over the wrong field");
        }
        Ideal {
            vars,
            modulus,
            gens,
        }
    }

    pub fn zero(vars: usize, modulus: u64) -> Self {
        Ideal {
            vars,
            modulus,
            gens: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Extend by further generators.
    pub fn with_extra(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.vars, self.modulus, gens)
    }

    /// Intersection with another ideal, by eliminating an auxiliary
    /// variable t from t*I + (1-t)*J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        assert_eq!(self.vars, other.vars);
        assert_eq!(self.modulus, other.modulus);
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.vars, self.modulus));
        }
        let m = self.vars;
        let ext = m + 1; // t is the extra variable, placed last
        let t = Polynomial::variable(ext, self.modulus, ext);
        let one_minus_t = Polynomial::constant(ext, self.modulus, 1) - t.clone();
        let lift = |p: &Polynomial| -> Polynomial {
            let mut q = Polynomial::zero(ext, self.modulus);
            for (mono, c) in p.terms() {
                q.add_term(mono.extend(ext), *c);
            }
            q
        };
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.gens {
            gens.push(&t * &lift(f));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &lift(g));
        }
        // lex with t most significant eliminates t
        let mut priority = vec![ext];
        priority.extend(1..=m);
        let ord = TermOrder::lex(ext).with_priority(priority)?;
        let gb = groebner::groebner_basis(&gens, &ord)?;
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| p.terms().all(|(mono, _)| mono.exponent(ext) == 0))
            .map(|p| {
                let mut q = Polynomial::zero(m, self.modulus);
                for (mono, c) in p.terms() {
                    q.add_term(mono.restrict(m), *c);
                }
                q
            })
            .collect();
        if kept.iter().any(|p| p.total_degree() == Some(0)) {
            return Err(Error::UnitIdeal);
        }
        // re-reduce in the small ring so the output is canonical
        let out = groebner::groebner_basis(&kept, &TermOrder::grevlex(m))?;
        Ok(Ideal::new(m, self.modulus, out))
    }

    /// The set of initial monomials of the generators (not of the ideal).
    pub fn generator_initial_monomials(&self, ord: &TermOrder) -> Result<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| g.initial_term(ord).map(|(m, _)| m))
            .collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_MODULUS;

    const P: u64 = DEFAULT_MODULUS;

    #[test]
    fn intersection_of_principal_ideals() {
        let m = 2;
        let f = Polynomial::variable(m, P, 1);
        let g = Polynomial::variable(m, P, 2);
        let a = Ideal::new(m, P, vec![f.clone()]);
        let b = Ideal::new(m, P, vec![g.clone()]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0], &f * &g);
    }

    #[test]
    fn intersection_with_containment() {
        let m = 2;
        let x1 = Polynomial::variable(m, P, 1);
        let a = Ideal::new(m, P, vec![x1.clone()]);
        let b = Ideal::new(m, P, vec![x1.clone(), Polynomial::variable(m, P, 2)]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.generators(), &[x1]);
    }
}
