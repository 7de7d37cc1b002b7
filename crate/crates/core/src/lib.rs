//! Exact reasoning for circuits built from unreliable logic gates.
//!
//! A circuit is a formula whose `?`-marked gates each produce the correct
//! output with probability `nu` and the complemented output otherwise. The
//! probability that the circuit agrees with a valuation is a polynomial in
//! `nu`; every question this crate answers reduces to exact univariate real
//! algebra on those polynomials.
//!
//! * [`formula`]: syntax, outcomes, probability polynomials, satisfaction.
//! * [`kernel`]: rationals, polynomials, Sturm sequences, algebraic numbers,
//!   sign-condition satisfiability and lower-envelope maximization.
//! * [`algorithms`]: entailment, model witnesses, satisfiability,
//!   reliability-rate abduction and decision, success-rate optimization.

pub mod algorithms;
pub mod error;
pub mod formula;
pub mod kernel;

pub use error::{Error, Result};
