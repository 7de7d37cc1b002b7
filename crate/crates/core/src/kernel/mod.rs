//! Exact univariate real algebra: the decision and optimization queries the
//! reasoning procedures issue, answered with rational arithmetic only.

pub mod algebraic;
pub mod envelope;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod sat;
pub mod sturm;

pub use algebraic::{simplest_between, AlgebraicNumber};
pub use envelope::{lower_envelope_max, EnvelopeMax};
pub use interval::Interval;
pub use poly::Polynomial;
pub use rational::{parse_rational, Rational};
pub use sat::{exists_sat, Relation, SatResult, SignCondition};
pub use sturm::{count_roots, isolate_roots, SturmSequence};
