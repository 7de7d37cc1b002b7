use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::ast::{Formula, MisfirePattern};
use super::circuit::success_polynomial;
use super::outcome::outcome_probability;
use super::valuation::Interpretation;
use crate::error::{Error, Result};
use crate::kernel::poly::Polynomial;

/// `mu <= bound`, with `bound` a polynomial in `nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmbitionFormula {
    pub bound: Polynomial,
}

impl AmbitionFormula {
    pub fn new(bound: Polynomial) -> Self {
        AmbitionFormula { bound }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (lhs, rhs, op_len) = match text.find("<=") {
            Some(i) => (&text[..i], &text[i..], 2),
            None => match text.find('≤') {
                Some(i) => (&text[..i], &text[i..], '≤'.len_utf8()),
                None => return Err(Error::parse(0, "expected `mu <= P`")),
            },
        };
        let lhs_t = lhs.trim();
        if lhs_t != "mu" && lhs_t != "μ" {
            let pos = lhs.len() - lhs.trim_start().len();
            return Err(Error::parse(
                pos,
                format!("expected `mu`, found `{}`", lhs_t),
            ));
        }
        let offset = lhs.len() + op_len;
        let bound_text = &rhs[op_len..];
        if mentions_mu(bound_text) {
            return Err(Error::MuInBound);
        }
        let bound = Polynomial::parse(bound_text).map_err(|e| match e {
            Error::Parse { pos, message } => Error::Parse {
                pos: pos + offset,
                message,
            },
            other => other,
        })?;
        Ok(AmbitionFormula { bound })
    }
}

fn mentions_mu(text: &str) -> bool {
    text.split(|c: char| !(c.is_alphanumeric() || c == '_'))
        .any(|w| w == "mu" || w == "μ")
}

impl fmt::Display for AmbitionFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu <= {}", self.bound)
    }
}

impl FromStr for AmbitionFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AmbitionFormula::parse(s)
    }
}

/// `outcomes |>_bound target`: the outcomes listed have joint probability at
/// least `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutcomeFormula {
    outcomes: Vec<Formula>,
    patterns: BTreeSet<MisfirePattern>,
    bound: Polynomial,
    target: Formula,
}

impl OutcomeFormula {
    /// Fails if some member of `outcomes` is not an outcome of `target`.
    pub fn new(outcomes: Vec<Formula>, bound: Polynomial, target: Formula) -> Result<Self> {
        let mut patterns = BTreeSet::new();
        for o in &outcomes {
            let p = target
                .pattern_of(o)
                .ok_or_else(|| Error::NotAnOutcome(o.to_string()))?;
            patterns.insert(p);
        }
        Ok(OutcomeFormula {
            outcomes,
            patterns,
            bound,
            target,
        })
    }

    pub fn outcomes(&self) -> &[Formula] {
        &self.outcomes
    }

    pub fn bound(&self) -> &Polynomial {
        &self.bound
    }

    pub fn target(&self) -> &Formula {
        &self.target
    }

    /// Joint probability of the listed outcomes; repeated outcomes count once.
    pub fn probability(&self) -> Polynomial {
        self.patterns
            .iter()
            .map(|p| outcome_probability(&self.target, p).expect("pattern derived from target"))
            .sum()
    }
}

/// Truth of a formula under an interpretation.
pub trait Satisfiable {
    fn satisfied_by(&self, i: &Interpretation) -> Result<bool>;
}

impl Satisfiable for Formula {
    fn satisfied_by(&self, i: &Interpretation) -> Result<bool> {
        Ok(i.mu <= success_polynomial(self, &i.valuation)?.eval(&i.nu))
    }
}

impl Satisfiable for OutcomeFormula {
    fn satisfied_by(&self, i: &Interpretation) -> Result<bool> {
        Ok(self.bound.eval(&i.nu) <= self.probability().eval(&i.nu))
    }
}

impl Satisfiable for AmbitionFormula {
    fn satisfied_by(&self, i: &Interpretation) -> Result<bool> {
        Ok(i.mu <= self.bound.eval(&i.nu))
    }
}

pub fn satisfies<F: Satisfiable + ?Sized>(i: &Interpretation, f: &F) -> Result<bool> {
    f.satisfied_by(i)
}
