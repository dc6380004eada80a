//! Exact verification of basic hypergeometric summation theorems and product
//! formulas.
//!
//! Everything except [`limits`] runs in exact rational arithmetic:
//!
//! - [`qcore`]: rationals, monomials in the parameters, q-shifted factorials
//!   and a reducer that cancels quotients of infinite q-products.
//! - [`series`]: truncated power series in `z`.
//! - [`hyper`]: `_rφ_s` and `_pF_q` coefficient builders.
//! - [`identities`]: one executable check per identity, sampling and suites.
//! - [`limits`]: high-precision checks of the `q → 1` degenerations.
//! - [`cli`]: configuration and report rendering for the `verify` binary.

pub mod cli;
pub mod error;
pub mod hyper;
pub mod identities;
pub mod limits;
pub mod qcore;
pub mod series;

pub use error::{Error, Result};
pub use qcore::{rational::rat, Monomial, ParamPoint, Rational, Symbol};
pub use series::TruncatedSeries;
