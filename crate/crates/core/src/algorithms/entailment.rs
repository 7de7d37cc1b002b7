//! Entailment from ambition premises.
//!
//! For a valuation `v`, entailment fails iff some `nu` in (1/2, 1] and `mu`
//! in (1/2, 1] satisfy every premise `mu <= P_g(nu)` while `mu > P_v(nu)`.
//! For fixed `nu` the admissible `mu` form the interval
//! `(max(1/2, P_v(nu)), min(1, min_g P_g(nu))]`, which is nonempty iff every
//! lower bound is below every upper bound. The `mu` quantifier therefore
//! disappears and one univariate conjunction per valuation remains:
//! `1/2 < P_g`, `P_v < 1`, `P_v < P_g` for all premises `g`.

use num_traits::One;
use rayon::prelude::*;

use super::{Reasoner, SuccessTable};
use crate::error::Result;
use crate::formula::{AmbitionFormula, Formula, Valuation};
use crate::kernel::rational::half;
use crate::kernel::{exists_sat, Interval, Polynomial, Rational, Relation, SignCondition};

/// An interpretation satisfying every premise but not the conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub valuation: Valuation,
    pub nu: Rational,
    pub mu: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entailment {
    pub entailed: bool,
    pub counterexample: Option<Counterexample>,
}

pub(crate) fn refutation_conditions(
    p: &Polynomial,
    gamma: &[AmbitionFormula],
) -> Vec<SignCondition> {
    let one = Polynomial::one();
    let half = Polynomial::constant(half());
    let mut conds = vec![SignCondition::compare(&one, Relation::Gt, p)];
    for g in gamma {
        conds.push(SignCondition::compare(&g.bound, Relation::Gt, &half));
        conds.push(SignCondition::compare(&g.bound, Relation::Gt, p));
    }
    conds
}

fn counterexample(
    table: &SuccessTable,
    index: usize,
    gamma: &[AmbitionFormula],
) -> Option<Counterexample> {
    let p = table.poly(index);
    let conds = refutation_conditions(p, gamma);
    let res = exists_sat(&conds, &Interval::unit_rate());
    if !res.satisfiable {
        return None;
    }
    // Strict conditions carve out an open set, so a rational witness exists.
    let nu = res
        .witness
        .expect("open satisfying set has a rational point");
    let mu = gamma
        .iter()
        .map(|g| g.bound.eval(&nu))
        .fold(Rational::one(), |a, b| if b < a { b } else { a });
    Some(Counterexample {
        valuation: table.valuation(index),
        nu,
        mu,
    })
}

impl Reasoner {
    /// Decides whether the premises `gamma` entail `psi`.
    pub fn entails(&self, psi: &Formula, gamma: &[AmbitionFormula]) -> Result<Entailment> {
        let table = self.success_table(psi)?;
        let found = (0..table.len())
            .into_par_iter()
            .filter_map(|i| counterexample(&table, i, gamma).map(|c| (i, c)))
            .min_by_key(|(i, _)| *i);
        Ok(Entailment {
            entailed: found.is_none(),
            counterexample: found.map(|(_, c)| c),
        })
    }

    /// Validity, as entailment from no premises.
    pub fn valid(&self, psi: &Formula) -> Result<bool> {
        Ok(self.entails(psi, &[])?.entailed)
    }
}
