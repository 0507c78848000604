//! Monomial ideals: minimal coordinate primes, codimension by exact
//! hitting-set search, and top-dimensional components with multiplicity.

use crate::error::{Error, Result};
use crate::groebner;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::fmt;

/// A prime ideal generated by a subset of the variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordinatePrime {
    vars: Vec<usize>, // sorted, 1-based
}

impl CoordinatePrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        assert!(!vars.is_empty(), "coordinate prime needs at least one variable");
        CoordinatePrime { vars }
    }

    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// The prime contains a monomial iff it divides by one of its variables.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.vars.iter().any(|&v| m.exponent(v) > 0)
    }

    /// Variables of the ambient ring outside the prime, sorted.
    pub fn complement(&self, vars: usize) -> Vec<usize> {
        (1..=vars).filter(|v| !self.contains_var(*v)).collect()
    }

    pub fn as_ideal(&self, vars: usize, modulus: u64) -> Ideal {
        Ideal::new(
            vars,
            modulus,
            self.vars
                .iter()
                .map(|&v| Polynomial::variable(vars, modulus, v))
                .collect(),
        )
    }
}

impl fmt::Display for CoordinatePrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CoordinatePrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial ideal with a minimalized generating set: no generator
/// divides another. The empty list is the zero ideal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: usize, gens: Vec<Monomial>) -> Self {
        let mut kept: Vec<Monomial> = Vec::new();
        for g in gens {
            debug_assert_eq!(g.vars(), vars);
            if kept.iter().any(|h| h.divides(&g)) {
                continue;
            }
            kept.retain(|h| !g.divides(h));
            kept.push(g);
        }
        kept.sort();
        MonomialIdeal { vars, gens: kept }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.vars, other.vars);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.vars, gens)
    }

    pub fn to_ideal(&self, modulus: u64) -> Ideal {
        Ideal::new(
            self.vars,
            modulus,
            self.gens
                .iter()
                .map(|m| Polynomial::from_monomial(self.vars, modulus, m.clone()))
                .collect(),
        )
    }

    fn support_masks(&self) -> Vec<u64> {
        assert!(self.vars <= 64, "too many variables for mask arithmetic");
        self.gens
            .iter()
            .map(|g| {
                g.support()
                    .into_iter()
                    .fold(0u64, |acc, v| acc | (1u64 << (v - 1)))
            })
            .collect()
    }

    /// All inclusion-minimal coordinate primes containing the ideal,
    /// sorted by (cardinality, variable list). These are exactly the
    /// minimal hitting sets of the generator supports. The zero ideal
    /// has no coordinate prime and yields an empty list.
    pub fn minimal_primes(&self) -> Result<Vec<CoordinatePrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.is_zero_ideal() {
            return Ok(Vec::new());
        }
        let masks = self.support_masks();
        // Berge's transversal construction: fold in one support at a time,
        // keeping the antichain of minimal hitting sets.
        let mut current: Vec<u64> = vec![0];
        for &s in &masks {
            let mut next: Vec<u64> = Vec::new();
            for &h in &current {
                if h & s != 0 {
                    push_minimal(&mut next, h);
                } else {
                    let mut bits = s;
                    while bits != 0 {
                        let v = bits.trailing_zeros();
                        bits &= bits - 1;
                        push_minimal(&mut next, h | (1u64 << v));
                    }
                }
            }
            current = next;
        }
        let mut primes: Vec<CoordinatePrime> = current
            .into_iter()
            .map(|mask| {
                CoordinatePrime::new(
                    (0..self.vars)
                        .filter(|i| mask & (1u64 << i) != 0)
                        .map(|i| i + 1)
                        .collect(),
                )
            })
            .collect();
        primes.sort_by(|a, b| (a.len(), a.variables()).cmp(&(b.len(), b.variables())));
        Ok(primes)
    }

    /// Codimension: the minimum size of a hitting set of the generator
    /// supports, found by branch and bound without enumerating all primes.
    pub fn codim_monomial(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.is_zero_ideal() {
            return Ok(0);
        }
        let masks = self.support_masks();
        let mut best = greedy_hitting_upper_bound(&masks);
        branch_hitting(&masks, 0, 0, &mut best);
        Ok(best)
    }

    /// The minimal primes of minimal cardinality, each with its
    /// multiplicity: the vector-space dimension of the localization,
    /// counted as the monomials in the prime's variables outside the
    /// ideal obtained by setting all other variables to 1.
    pub fn top_components(&self) -> Result<Vec<(CoordinatePrime, usize)>> {
        let primes = self.minimal_primes()?;
        let Some(c) = primes.first().map(|p| p.len()) else {
            return Ok(Vec::new());
        };
        primes
            .into_iter()
            .take_while(|p| p.len() == c)
            .map(|p| {
                let mult = self.localization_length(&p)?;
                Ok((p, mult))
            })
            .collect()
    }

    fn localization_length(&self, prime: &CoordinatePrime) -> Result<usize> {
        let pvars = prime.variables();
        // restrict each generator to the prime variables (set the rest to 1)
        let restricted: Vec<Vec<u32>> = self
            .gens
            .iter()
            .map(|g| pvars.iter().map(|&v| g.exponent(v)).collect())
            .collect();
        // box bounds from pure powers, which exist because the prime is an
        // inclusion-minimal hitting set
        let mut bounds = vec![u32::MAX; pvars.len()];
        for r in &restricted {
            let support: Vec<usize> = r
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
            if support.len() == 1 {
                let i = support[0];
                bounds[i] = bounds[i].min(r[i]);
            }
        }
        if bounds.iter().any(|&b| b == u32::MAX) {
            return Err(Error::Invalid(
                "localization is not finite at the given prime".into(),
            ));
        }
        let mut count = 0usize;
        let mut exp = vec![0u32; pvars.len()];
        count_standard(&restricted, &bounds, &mut exp, 0, &mut count);
        Ok(count)
    }
}

fn count_standard(
    gens: &[Vec<u32>],
    bounds: &[u32],
    exp: &mut Vec<u32>,
    pos: usize,
    count: &mut usize,
) {
    if pos == bounds.len() {
        let divisible = gens
            .iter()
            .any(|g| g.iter().zip(exp.iter()).all(|(a, b)| a <= b));
        if !divisible {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[pos] {
        exp[pos] = e;
        count_standard(gens, bounds, exp, pos + 1, count);
    }
    exp[pos] = 0;
}

fn push_minimal(antichain: &mut Vec<u64>, candidate: u64) {
    if antichain.iter().any(|&h| h & candidate == h) {
        return; // an existing set is contained in the candidate
    }
    antichain.retain(|&h| h & candidate != candidate);
    antichain.push(candidate);
}

fn greedy_hitting_upper_bound(masks: &[u64]) -> usize {
    let mut remaining: Vec<u64> = masks.to_vec();
    let mut size = 0;
    while let Some(&s) = remaining.first() {
        // hit with the variable covering the most remaining supports
        let mut best_v = s.trailing_zeros();
        let mut best_cover = 0;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let cover = remaining.iter().filter(|&&t| t & (1 << v) != 0).count();
            if cover > best_cover {
                best_cover = cover;
                best_v = v;
            }
        }
        remaining.retain(|&t| t & (1 << best_v) == 0);
        size += 1;
    }
    size
}

fn branch_hitting(remaining: &[u64], chosen: usize, hit_mask: u64, best: &mut usize) {
    let unhit: Vec<u64> = remaining
        .iter()
        .copied()
        .filter(|&s| s & hit_mask == 0)
        .collect();
    if unhit.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    // lower bound from pairwise-disjoint unhit supports
    let mut lb = 0;
    let mut used = 0u64;
    for &s in &unhit {
        if s & used == 0 {
            lb += 1;
            used |= s;
        }
    }
    if chosen + lb >= *best {
        return;
    }
    let mut bits = unhit[0];
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        branch_hitting(&unhit, chosen + 1, hit_mask | (1 << v), best);
    }
}

/// Codimension of a polynomial ideal: the codimension of the ideal of
/// initial terms of a full Groebner basis, which equals the codimension
/// of the ideal itself.
pub fn codim_ideal(ideal: &Ideal, ord: &TermOrder) -> Result<usize> {
    if ideal.is_zero_ideal() {
        return Ok(0);
    }
    let gb = groebner::groebner_basis(ideal.generators(), ord)?;
    if groebner::is_unit_basis(&gb) {
        return Err(Error::UnitIdeal);
    }
    groebner::initial_ideal(&gb, ord)?.codim_monomial()
}

/// The initial ideal of a polynomial ideal under the given order.
pub fn initial_ideal_of(ideal: &Ideal, ord: &TermOrder) -> Result<MonomialIdeal> {
    if ideal.is_zero_ideal() {
        return Ok(MonomialIdeal::new(ideal.vars(), Vec::new()));
    }
    let gb = groebner::groebner_basis(ideal.generators(), ord)?;
    groebner::initial_ideal(&gb, ord)
}
