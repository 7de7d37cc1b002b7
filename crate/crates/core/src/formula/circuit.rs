//! Bit-parallel evaluation of a circuit under all misfire patterns at once.
//!
//! Patterns are processed 64 at a time: lane `i` of a batch starting at
//! pattern index `b` (a multiple of 64) stands for pattern `b + i`. Because a
//! misfiring gate outputs the complement of its reliable value, each gate is
//! evaluated on whole words and XORed with that gate's misfire mask.

use rayon::prelude::*;

use super::ast::Formula;
use super::connective::Kind;
use super::outcome::{binomial_term, check_gates, ABSOLUTE_MAX_GATES};
use super::valuation::Valuation;
use crate::error::{Error, Result};
use crate::kernel::poly::Polynomial;
use crate::kernel::rational::Rational;

#[derive(Clone, Debug)]
enum Node {
    Var(usize),
    Gate {
        kind: Kind,
        gate: Option<usize>,
        children: Vec<usize>,
    },
}

/// A formula flattened in pre-order, with variables numbered in sorted order.
#[derive(Clone, Debug)]
pub struct Circuit {
    nodes: Vec<Node>,
    vars: Vec<String>,
    gates: usize,
}

// Lanes whose index has bit `s` set.
const LANE_BIT: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn lanes_with_popcount() -> [u64; 7] {
    let mut out = [0u64; 7];
    for lane in 0..64u32 {
        out[lane.count_ones() as usize] |= 1 << lane;
    }
    out
}

fn apply_lanes(kind: Kind, a: &[u64]) -> u64 {
    match kind {
        Kind::Verum => !0,
        Kind::Falsum => 0,
        Kind::Not => !a[0],
        Kind::Id => a[0],
        Kind::And => a[0] & a[1],
        Kind::Or => a[0] | a[1],
        Kind::Imp => !a[0] | a[1],
        Kind::Iff => !(a[0] ^ a[1]),
        Kind::Maj(_) => {
            let mut out = 0u64;
            for lane in 0..64 {
                let ones = a.iter().filter(|w| *w >> lane & 1 == 1).count();
                if 2 * ones > a.len() {
                    out |= 1 << lane;
                }
            }
            out
        }
        negated => !apply_lanes(negated.complement().expect("negated kinds have a base"), a),
    }
}

impl Circuit {
    pub fn compile(psi: &Formula) -> Self {
        let vars: Vec<String> = psi.variables().into_iter().collect();
        let mut c = Circuit {
            nodes: Vec::with_capacity(psi.size()),
            vars,
            gates: 0,
        };
        c.push(psi);
        c
    }

    fn push(&mut self, f: &Formula) -> usize {
        let id = self.nodes.len();
        match f {
            Formula::Var(x) => {
                let i = self.vars.binary_search(x).expect("collected variable");
                self.nodes.push(Node::Var(i));
            }
            Formula::App { op, args } => {
                let gate = op.unreliable.then(|| {
                    self.gates += 1;
                    self.gates - 1
                });
                self.nodes.push(Node::Gate {
                    kind: op.kind,
                    gate,
                    children: Vec::new(),
                });
                let kids: Vec<usize> = args.iter().map(|a| self.push(a)).collect();
                if let Node::Gate { children, .. } = &mut self.nodes[id] {
                    *children = kids;
                }
            }
        }
        id
    }

    /// Sorted variable names; position `i` is bit `i` of [`Circuit::values`].
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn gates(&self) -> usize {
        self.gates
    }

    /// Variable values in circuit order, read from a valuation.
    pub fn values(&self, v: &Valuation) -> Result<Vec<bool>> {
        self.vars
            .iter()
            .map(|x| v.get(x).ok_or_else(|| Error::UnboundVariable(x.clone())))
            .collect()
    }

    fn eval_batch(&self, vals: &[u64], masks: &[u64], scratch: &mut Vec<u64>) -> u64 {
        scratch.clear();
        scratch.resize(self.nodes.len(), 0);
        let mut args: Vec<u64> = Vec::new();
        for id in (0..self.nodes.len()).rev() {
            scratch[id] = match &self.nodes[id] {
                Node::Var(i) => vals[*i],
                Node::Gate {
                    kind,
                    gate,
                    children,
                } => {
                    args.clear();
                    args.extend(children.iter().map(|&c| scratch[c]));
                    let out = apply_lanes(*kind, &args);
                    match gate {
                        Some(g) => out ^ masks[*g],
                        None => out,
                    }
                }
            };
        }
        scratch[0]
    }

    /// `counts[l]` = number of misfire patterns with exactly `l` correct
    /// gates whose outcome is true under the given variable values.
    pub fn success_counts(&self, values: &[bool]) -> Vec<u64> {
        let m = self.gates;
        assert!(m <= ABSOLUTE_MAX_GATES);
        let vals: Vec<u64> = values.iter().map(|&b| if b { !0 } else { 0 }).collect();
        let by_pc = lanes_with_popcount();
        let valid = if m >= 6 {
            !0u64
        } else {
            (1u64 << (1u32 << m)) - 1
        };
        let batches: u64 = if m >= 6 { 1 << (m - 6) } else { 1 };

        let run = |batch: u64, counts: &mut Vec<u64>, scratch: &mut Vec<u64>| {
            let base = batch << 6;
            let masks: Vec<u64> = (0..m)
                .map(|g| {
                    let s = m - 1 - g;
                    if s < 6 {
                        LANE_BIT[s]
                    } else if base >> s & 1 == 1 {
                        !0
                    } else {
                        0
                    }
                })
                .collect();
            let out = self.eval_batch(&vals, &masks, scratch) & valid;
            let base_misfires = base.count_ones() as usize;
            for (k, lanes) in by_pc.iter().enumerate() {
                let n = (out & lanes).count_ones();
                if n > 0 {
                    counts[m - base_misfires - k] += u64::from(n);
                }
            }
        };

        if batches < 512 {
            let mut counts = vec![0u64; m + 1];
            let mut scratch = Vec::new();
            for b in 0..batches {
                run(b, &mut counts, &mut scratch);
            }
            counts
        } else {
            (0..batches)
                .into_par_iter()
                .fold(
                    || (vec![0u64; m + 1], Vec::new()),
                    |(mut counts, mut scratch), b| {
                        run(b, &mut counts, &mut scratch);
                        (counts, scratch)
                    },
                )
                .map(|(c, _)| c)
                .reduce(
                    || vec![0u64; m + 1],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        }
    }

    pub fn success_polynomial_for(&self, values: &[bool]) -> Polynomial {
        let m = self.gates;
        self.success_counts(values)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .map(|(l, c)| binomial_term(m, l).scale(&Rational::from_integer(c.into())))
            .sum()
    }
}

/// Sum of the probabilities of the outcomes of `psi` that `v` satisfies.
pub fn success_polynomial(psi: &Formula, v: &Valuation) -> Result<Polynomial> {
    check_gates(psi, ABSOLUTE_MAX_GATES)?;
    let c = Circuit::compile(psi);
    let values = c.values(v)?;
    Ok(c.success_polynomial_for(&values))
}
