//! Exact scalars, symbolic monomials, q-shifted factorials and the
//! infinite-product reducer.

mod monomial;
mod poch;
mod point;
pub mod rational;

pub use monomial::{mono, Monomial, Symbol};
pub use poch::{
    eval_reduced, qpoch, reduce_poch_quotient, FiniteFactor, Placement, PochFactor, PochLength,
    ReducedProduct,
};
pub use point::ParamPoint;
pub use rational::Rational;
