//! Circuit formulas: syntax, outcomes, and the probability polynomials built
//! from them.

pub mod ast;
pub mod circuit;
pub mod claims;
pub mod connective;
pub mod outcome;
pub mod valuation;

pub use ast::{Formula, MisfirePattern};
pub use circuit::{success_polynomial, Circuit};
pub use claims::{satisfies, AmbitionFormula, OutcomeFormula, Satisfiable};
pub use connective::{Connective, Kind};
pub use outcome::{
    binomial_term, outcome_probability, outcomes, pattern_from_index, Outcome, Outcomes,
    DEFAULT_MAX_GATES,
};
pub use valuation::{check_rate, Interpretation, Valuation};
