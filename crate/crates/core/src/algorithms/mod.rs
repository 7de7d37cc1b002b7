//! The decision, witness, abduction and optimization procedures. Each one
//! builds success polynomials per valuation and hands univariate sign
//! queries to the kernel.

mod abduction;
mod entailment;
mod optimization;
mod witness;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formula::outcome::check_gates;
use crate::formula::{Circuit, Formula, Valuation, DEFAULT_MAX_GATES};
use crate::kernel::Polynomial;

pub use abduction::{Abduction, RateDecision, Rejection};
pub use entailment::{Counterexample, Entailment};
pub use optimization::Optimum;
pub use witness::{PmcMode, Witness};

/// Entry point for all procedures. `max_gates` bounds the number of
/// unreliable gates a formula may have, since every procedure enumerates
/// `2^gates` misfire patterns per valuation.
#[derive(Clone, Debug)]
pub struct Reasoner {
    pub max_gates: usize,
}

impl Default for Reasoner {
    fn default() -> Self {
        Reasoner {
            max_gates: DEFAULT_MAX_GATES,
        }
    }
}

/// Success polynomials of one formula for every valuation of its variables,
/// indexed in canonical valuation order.
#[derive(Clone, Debug)]
pub struct SuccessTable {
    vars: Vec<String>,
    polys: Vec<Polynomial>,
}

impl SuccessTable {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn poly(&self, index: usize) -> &Polynomial {
        &self.polys[index]
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn valuation(&self, index: usize) -> Valuation {
        Valuation::nth(&self.vars, index as u64)
    }

    /// Distinct polynomials, first occurrence order.
    pub fn distinct(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for p in &self.polys {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        out
    }
}

const MAX_VARIABLES: usize = 30;

impl Reasoner {
    pub fn new(max_gates: usize) -> Self {
        Reasoner { max_gates }
    }

    fn prepare(&self, psi: &Formula) -> Result<Circuit> {
        check_gates(psi, self.max_gates)?;
        let c = Circuit::compile(psi);
        if c.vars().len() > MAX_VARIABLES {
            return Err(Error::InvalidArgument(format!(
                "{} variables is more than the supported {}",
                c.vars().len(),
                MAX_VARIABLES
            )));
        }
        Ok(c)
    }

    pub fn success_table(&self, psi: &Formula) -> Result<SuccessTable> {
        let c = self.prepare(psi)?;
        let n = c.vars().len();
        let polys = (0..1u64 << n)
            .into_par_iter()
            .map(|i| c.success_polynomial_for(&bits(n, i)))
            .collect();
        Ok(SuccessTable {
            vars: c.vars().to_vec(),
            polys,
        })
    }
}

fn bits(n: usize, index: u64) -> Vec<bool> {
    (0..n).map(|i| index >> (n - 1 - i) & 1 == 1).collect()
}

/// Canonical valuation indices, optionally starting from `start`.
fn visiting_order(n: usize, start: Option<u64>) -> impl Iterator<Item = u64> {
    let total = 1u64 << n;
    start
        .into_iter()
        .chain((0..total).filter(move |&i| Some(i) != start))
}

fn start_index(c: &Circuit, start: Option<&Valuation>) -> Result<Option<u64>> {
    start.map(|v| v.index_in(c.vars())).transpose()
}
