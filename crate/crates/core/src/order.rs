//! Term orders: lex, graded reverse lex, and weight orders, each with an
//! optional variable permutation.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Weight comparison first, graded reverse lex as tie-break.
    /// Weights are indexed by variable (not by priority position).
    Weight(Vec<i64>),
}

/// A total multiplicative order on monomials with 1 minimal.
///
/// `priority` lists the 1-based variables from most to least significant;
/// the identity permutation gives the usual x1 > x2 > ... > xm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn lex(vars: usize) -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            priority: (1..=vars).collect(),
        }
    }

    pub fn grevlex(vars: usize) -> Self {
        TermOrder {
            kind: OrderKind::Grevlex,
            priority: (1..=vars).collect(),
        }
    }

    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let m = priority.len();
        let mut seen = vec![false; m];
        for &v in &priority {
            if v < 1 || v > m || seen[v - 1] {
                return Err(Error::Invalid(format!(
                    "priority list is not a permutation of 1..={m}"
                )));
            }
            seen[v - 1] = true;
        }
        if let OrderKind::Weight(w) = &kind {
            if w.len() != m {
                return Err(Error::Invalid(
                    "weight vector length differs from variable count".into(),
                ));
            }
            if w.iter().any(|&wi| wi < 0) {
                return Err(Error::Invalid(
                    "weight vector entries must be non-negative".into(),
                ));
            }
        }
        Ok(TermOrder { kind, priority })
    }

    /// Weight order with the stated weights and grevlex tie-break.
    pub fn weight(weights: Vec<i64>) -> Result<Self> {
        let m = weights.len();
        TermOrder::new(OrderKind::Weight(weights), (1..=m).collect())
    }

    pub fn with_priority(&self, priority: Vec<usize>) -> Result<Self> {
        TermOrder::new(self.kind.clone(), priority)
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn vars(&self) -> usize {
        self.priority.len()
    }

    pub fn weights(&self) -> Option<&[i64]> {
        match &self.kind {
            OrderKind::Weight(w) => Some(w),
            _ => None,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.vars(), self.vars());
        debug_assert_eq!(b.vars(), self.vars());
        match &self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::Grevlex => self.cmp_grevlex(a, b),
            OrderKind::Weight(w) => {
                let wa: i128 = a
                    .exponents()
                    .iter()
                    .zip(w)
                    .map(|(&e, &wi)| e as i128 * wi as i128)
                    .sum();
                let wb: i128 = b
                    .exponents()
                    .iter()
                    .zip(w)
                    .map(|(&e, &wi)| e as i128 * wi as i128)
                    .sum();
                wa.cmp(&wb).then_with(|| self.cmp_grevlex(a, b))
            }
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn cmp_grevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // equal degree: the last priority position with differing exponent
        // decides, smaller exponent there being greater
        for &v in self.priority.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// A weight vector that reproduces this order on every comparison of
    /// monomials of total degree at most `max_degree`. For a weight order
    /// the stored weights are returned unchanged.
    pub fn representing_weights(&self, max_degree: u32) -> Vec<i64> {
        let m = self.vars();
        if let OrderKind::Weight(w) = &self.kind {
            return w.clone();
        }
        let base = (max_degree as i64 + 2).max(2);
        let mut w = vec![0i64; m];
        match self.kind {
            OrderKind::Lex => {
                // w[priority j] = base^(m-1-j)
                for (j, &v) in self.priority.iter().enumerate() {
                    w[v - 1] = base.pow((m - 1 - j) as u32);
                }
            }
            OrderKind::Grevlex => {
                let top = base.pow((m - 1) as u32);
                w[self.priority[0] - 1] = top;
                for (j, &v) in self.priority.iter().enumerate().skip(1) {
                    w[v - 1] = top - base.pow((j - 1) as u32);
                }
            }
            OrderKind::Weight(_) => unreachable!(),
        }
        w
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Lex => write!(f, "lex")?,
            OrderKind::Grevlex => write!(f, "grevlex")?,
            OrderKind::Weight(w) => {
                write!(f, "weight:")?;
                for (i, wi) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{wi}")?;
                }
            }
        }
        if self.priority.iter().enumerate().any(|(i, &v)| v != i + 1) {
            write!(f, " perm ")?;
            for (i, v) in self.priority.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
