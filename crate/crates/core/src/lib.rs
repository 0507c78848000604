//! Sparse systems of parameters in and modulo polynomial ideals.
//!
//! The crate provides exact polynomial arithmetic over a prime field,
//! truncated Buchberger completion, the combinatorics of monomial ideals,
//! partition-based construction of sparse parameter systems, greedy and
//! Chow-form based Noether normalization, sparseness measures for linear
//! subspaces, and stable-set oracles for the associated graph problems.

pub mod chow;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod monomial_ideal;
pub mod noether;
pub mod order;
pub mod poly;
pub mod sop;
pub mod sparsity;
pub mod stable_sets;

pub use error::{Error, Result};
pub use field::{FieldScalar, DEFAULT_MODULUS};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use monomial_ideal::{codim_ideal, CoordinatePrime, MonomialIdeal};
pub use order::{OrderKind, TermOrder};
pub use poly::Polynomial;
