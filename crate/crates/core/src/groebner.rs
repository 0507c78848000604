//! Multivariate division and the Buchberger algorithm with an early-stop
//! hook on the ideal of initial terms.

use crate::error::Result;
use crate::field::FieldScalar;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::collections::BTreeSet;

/// Remainder of `f` on division by `G`: no term of the result is divisible
/// by the initial term of any member of `G`. Divisors are tried in list
/// order, so the result is deterministic.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, FieldScalar)> = basis
        .iter()
        .map(|g| {
            g.initial_term(ord)
                .expect("normal_form requires non-zero divisors")
        })
        .collect();
    let mut remainder = Polynomial::zero(f.vars(), f.modulus());
    let mut work = f.clone();
    while !work.is_zero() {
        let (m, c) = work.initial_term(ord).unwrap();
        let mut reduced = false;
        for (g, (lm, lc)) in basis.iter().zip(&leads) {
            if lm.divides(&m) {
                let factor = c * lc.inv();
                let shift = m.div(lm);
                work = &work - &g.mul_monomial(&shift).scale(factor);
                reduced = true;
                break;
            }
        }
        if !reduced {
            work.add_term(m.clone(), -c);
            remainder.add_term(m, c);
        }
    }
    remainder
}

/// S-polynomial of two non-zero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let (mf, cf) = f.initial_term(ord).expect("s_polynomial of zero");
    let (mg, cg) = g.initial_term(ord).expect("s_polynomial of zero");
    let lcm = mf.lcm(&mg);
    let a = f.mul_monomial(&lcm.div(&mf)).scale(cf.inv());
    let b = g.mul_monomial(&lcm.div(&mg)).scale(cg.inv());
    &a - &b
}

/// Ideal of initial terms of a set of non-zero polynomials.
pub fn initial_ideal(basis: &[Polynomial], ord: &TermOrder) -> Result<MonomialIdeal> {
    let vars = basis.first().map(|p| p.vars()).unwrap_or(0);
    let leads: Result<Vec<Monomial>> = basis
        .iter()
        .map(|g| g.initial_term(ord).map(|(m, _)| m))
        .collect();
    Ok(MonomialIdeal::new(vars, leads?))
}

/// Buchberger completion. Critical pairs are processed in ascending
/// (lcm degree, pair index) order, so identical inputs give identical
/// outputs. After every basis extension the predicate `stop` is evaluated
/// on the ideal generated by the current initial terms; as soon as it
/// holds, the current list (input generators plus appended S-polynomial
/// remainders) is returned. With a never-true predicate the completed
/// list is inter-reduced into the reduced Groebner basis.
pub fn buchberger<F>(gens: &[Polynomial], ord: &TermOrder, mut stop: F) -> Result<Vec<Polynomial>>
where
    F: FnMut(&MonomialIdeal) -> bool,
{
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(basis);
    }
    if stop(&initial_ideal(&basis, ord)?) {
        return Ok(basis);
    }
    // pairs keyed by (degree of lcm of initial terms, j, i) with i < j
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let key = |basis: &[Polynomial], i: usize, j: usize| -> (u32, usize, usize) {
        let (mi, _) = basis[i].initial_term(ord).unwrap();
        let (mj, _) = basis[j].initial_term(ord).unwrap();
        (mi.lcm(&mj).degree(), j, i)
    };
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.insert(key(&basis, i, j));
        }
    }
    while let Some(&(d, j, i)) = pairs.iter().next() {
        pairs.remove(&(d, j, i));
        let (mi, _) = basis[i].initial_term(ord).unwrap();
        let (mj, _) = basis[j].initial_term(ord).unwrap();
        if mi.is_coprime(&mj) {
            continue; // product criterion
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        basis.push(r);
        let n = basis.len() - 1;
        for i2 in 0..n {
            pairs.insert(key(&basis, i2, n));
        }
        if stop(&initial_ideal(&basis, ord)?) {
            return Ok(basis);
        }
    }
    Ok(reduce_basis(basis, ord))
}

/// The reduced Groebner basis: full completion, minimalization, tail
/// reduction, monic normalization, sorted ascending by initial term.
pub fn groebner_basis(gens: &[Polynomial], ord: &TermOrder) -> Result<Vec<Polynomial>> {
    buchberger(gens, ord, |_| false)
}

fn reduce_basis(mut basis: Vec<Polynomial>, ord: &TermOrder) -> Vec<Polynomial> {
    // minimalize: drop members whose initial term another member divides
    let mut keep: Vec<bool> = vec![true; basis.len()];
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.initial_term(ord).unwrap().0)
        .collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && leads[j].divides(&leads[i])
                && (leads[i] != leads[j] || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each member against the others
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            if others.is_empty() {
                break;
            }
            let r = normal_form(&minimal[i], &others, ord);
            if r != minimal[i] {
                assert!(!r.is_zero(), "minimal basis member reduced to zero");
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut minimal {
        *g = g.monic(ord);
    }
    minimal.sort_by(|a, b| {
        let (ma, _) = a.initial_term(ord).unwrap();
        let (mb, _) = b.initial_term(ord).unwrap();
        ord.compare(&ma, &mb)
    });
    minimal
}

/// True when the reduced basis is `{1}`.
pub fn is_unit_basis(basis: &[Polynomial]) -> bool {
    basis.iter().any(|g| match g.total_degree() {
        Some(0) => true,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_MODULUS;

    const P: u64 = DEFAULT_MODULUS;

    fn lex2() -> TermOrder {
        TermOrder::lex(2)
    }

    #[test]
    fn normal_form_divisible_monomial() {
        let f = Polynomial::from_terms(2, P, &[(1, &[(1, 1), (2, 1)])]);
        let g = Polynomial::variable(2, P, 1);
        assert!(normal_form(&f, &[g], &lex2()).is_zero());
    }

    #[test]
    fn normal_form_single_division_step() {
        // x1^2 + x2 against x1^2 - x2^2 leaves x2^2 + x2
        let f = Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (1, &[(2, 1)])]);
        let g = Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]);
        let r = normal_form(&f, &[g.clone()], &lex2());
        let expect = Polynomial::from_terms(2, P, &[(1, &[(2, 2)]), (1, &[(2, 1)])]);
        assert_eq!(r, expect);
        // f - r must be the quotient times the divisor
        assert_eq!(&f - &r, g);
    }

    #[test]
    fn normal_form_no_divisor() {
        let f = Polynomial::variable(2, P, 2);
        let g = Polynomial::variable(2, P, 1);
        assert_eq!(normal_form(&f, &[g], &lex2()), f);
    }

    #[test]
    fn normal_form_idempotent() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let ord = TermOrder::grevlex(3);
        for _ in 0..40 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, terms: usize| {
                let mut p = Polynomial::zero(3, P);
                for _ in 0..terms {
                    p.add_term(
                        Monomial::from_exponents((0..3).map(|_| rng.gen_range(0..3)).collect()),
                        FieldScalar::new(rng.gen_range(1..P as i64), P),
                    );
                }
                p
            };
            let f = rand_poly(&mut rng, 4);
            let g1 = rand_poly(&mut rng, 2);
            let g2 = rand_poly(&mut rng, 2);
            let basis: Vec<Polynomial> =
                [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
            if basis.is_empty() {
                continue;
            }
            let r1 = normal_form(&f, &basis, &ord);
            let r2 = normal_form(&r1, &basis, &ord);
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn buchberger_on_a_basis_is_identity_after_reduction() {
        let gens = vec![
            Polynomial::variable(2, P, 1),
            Polynomial::variable(2, P, 2),
        ];
        let mut gb = groebner_basis(&gens, &lex2()).unwrap();
        gb.sort_by_key(|p| p.to_string());
        let mut expect = gens.clone();
        expect.sort_by_key(|p| p.to_string());
        assert_eq!(gb, expect);
    }

    #[test]
    fn buchberger_stop_based_on_initial_codim() {
        // initial terms x1^2, x1*x2 already generate a codimension-1 ideal,
        // so the run halts before adding anything
        let gens = vec![
            Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]),
            Polynomial::from_terms(2, P, &[(1, &[(1, 1), (2, 1)]), (1, &[(2, 2)])]),
        ];
        let out = buchberger(&gens, &lex2(), |init| init.codim_monomial().unwrap() == 1).unwrap();
        assert_eq!(out, gens);
    }

    #[test]
    fn every_s_polynomial_reduces_to_zero_on_full_basis() {
        let gens = vec![
            Polynomial::from_terms(2, P, &[(1, &[(1, 2)]), (-1, &[(2, 2)])]),
            Polynomial::from_terms(2, P, &[(1, &[(1, 1), (2, 1)]), (1, &[(2, 2)])]),
        ];
        let gb = groebner_basis(&gens, &lex2()).unwrap();
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j], &lex2());
                assert!(normal_form(&s, &gb, &lex2()).is_zero());
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let gens = vec![
            Polynomial::from_terms(3, P, &[(1, &[(1, 1), (2, 1)]), (1, &[(3, 2)])]),
            Polynomial::from_terms(3, P, &[(1, &[(2, 2)]), (-1, &[(1, 1), (3, 1)])]),
        ];
        let ord = TermOrder::grevlex(3);
        let a = groebner_basis(&gens, &ord).unwrap();
        let b = groebner_basis(&gens, &ord).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_detection() {
        let gens = vec![
            Polynomial::from_terms(1, P, &[(1, &[(1, 1)]), (1, &[])]),
            Polynomial::variable(1, P, 1),
        ];
        let gb = groebner_basis(&gens, &TermOrder::lex(1)).unwrap();
        assert!(is_unit_basis(&gb));
    }
}
