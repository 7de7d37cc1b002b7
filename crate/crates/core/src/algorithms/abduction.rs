//! Reliability-rate abduction over a uniform grid, and the decision whether
//! one rate serves every valuation.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::Reasoner;
use crate::error::{Error, Result};
use crate::formula::{check_rate, Formula, Valuation};
use crate::kernel::rational::half;
use crate::kernel::{exists_sat, Interval, Polynomial, Rational, Relation, SignCondition};

/// Why a grid cell was left out: at `nu`, valuation `valuation` falls short
/// of the target success rate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub index: usize,
    pub interval: Interval,
    pub valuation: Valuation,
    pub nu: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abduction {
    /// Grid cells on which every valuation reaches the target.
    pub intervals: Vec<Interval>,
    pub rejections: Vec<Rejection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateDecision {
    pub exists: bool,
    pub nu: Option<Rational>,
}

/// `(1/2 + j/2k, 1/2 + (j+1)/2k]`
pub fn grid_cell(j: usize, k: usize) -> Interval {
    let two_k = BigInt::from(2 * k);
    let lo = half() + Rational::new(BigInt::from(j), two_k.clone());
    let hi = half() + Rational::new(BigInt::from(j + 1), two_k);
    Interval::left_open(lo, hi)
}

impl Reasoner {
    /// The cells of the `k`-grid on (1/2, 1] where `mu_bar <= P_v(nu)` for
    /// every valuation and every `nu` in the cell.
    pub fn abduce(&self, psi: &Formula, mu_bar: &Rational, k: usize) -> Result<Abduction> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        check_rate("mu", mu_bar)?;
        let table = self.success_table(psi)?;
        let target = Polynomial::constant(mu_bar.clone());
        let shortfalls: Vec<SignCondition> = table
            .polys()
            .iter()
            .map(|p| SignCondition::compare(&target, Relation::Gt, p))
            .collect();
        let cells: Vec<(Interval, Option<Rejection>)> = (0..k)
            .into_par_iter()
            .map(|j| {
                let cell = grid_cell(j, k);
                let rejection = shortfalls.iter().enumerate().find_map(|(idx, cond)| {
                    let res = exists_sat(std::slice::from_ref(cond), &cell);
                    res.satisfiable.then(|| Rejection {
                        index: j,
                        interval: cell.clone(),
                        valuation: table.valuation(idx),
                        nu: res.witness,
                    })
                });
                (cell, rejection)
            })
            .collect();
        let mut out = Abduction {
            intervals: Vec::new(),
            rejections: Vec::new(),
        };
        for (cell, rej) in cells {
            match rej {
                Some(r) => out.rejections.push(r),
                None => out.intervals.push(cell),
            }
        }
        Ok(out)
    }

    /// Whether one `nu` in (1/2, 1] gives every valuation success
    /// probability at least `mu_bar`.
    pub fn decide_rate(&self, psi: &Formula, mu_bar: &Rational) -> Result<RateDecision> {
        check_rate("mu", mu_bar)?;
        let table = self.success_table(psi)?;
        let target = Polynomial::constant(mu_bar.clone());
        let conds: Vec<SignCondition> = table
            .distinct()
            .iter()
            .map(|p| SignCondition::compare(p, Relation::Ge, &target))
            .collect();
        let res = exists_sat(&conds, &Interval::unit_rate());
        Ok(RateDecision {
            exists: res.satisfiable,
            nu: res.witness,
        })
    }
}
