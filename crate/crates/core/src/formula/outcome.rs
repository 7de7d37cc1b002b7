use num_bigint::BigInt;
use num_traits::One;

use super::ast::{Formula, MisfirePattern};
use crate::error::{Error, Result};
use crate::kernel::poly::Polynomial;
use crate::kernel::rational::Rational;

/// Outcome enumeration refuses formulas with more unreliable gates than this
/// unless a larger limit is passed explicitly.
pub const DEFAULT_MAX_GATES: usize = 24;

/// Hard ceiling: pattern indices are 64-bit.
pub(crate) const ABSOLUTE_MAX_GATES: usize = 62;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub formula: Formula,
    pub pattern: MisfirePattern,
    pub probability: Polynomial,
}

/// `nu^l (1 - nu)^(m - l)` in expanded form:
/// `sum_j C(m - l, j) (-1)^j nu^(l + j)`.
pub fn binomial_term(m: usize, l: usize) -> Polynomial {
    assert!(l <= m);
    let n = m - l;
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); m + 1];
    let mut c = BigInt::one();
    for j in 0..=n {
        let term = if j % 2 == 0 { c.clone() } else { -c.clone() };
        coeffs[l + j] = Rational::from_integer(term);
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Polynomial::new(coeffs)
}

/// Probability of the outcome selected by `pattern`.
pub fn outcome_probability(psi: &Formula, pattern: &[bool]) -> Result<Polynomial> {
    let m = psi.unreliable_count();
    if pattern.len() != m {
        return Err(Error::PatternLength {
            expected: m,
            found: pattern.len(),
        });
    }
    let correct = pattern.iter().filter(|&&b| !b).count();
    Ok(binomial_term(m, correct))
}

pub(crate) fn check_gates(psi: &Formula, limit: usize) -> Result<usize> {
    let m = psi.unreliable_count();
    let limit = limit.min(ABSOLUTE_MAX_GATES);
    if m > limit {
        return Err(Error::GateLimit { gates: m, limit });
    }
    Ok(m)
}

/// The `index`-th pattern of width `m`, first gate most significant.
pub fn pattern_from_index(m: usize, index: u64) -> MisfirePattern {
    (0..m).map(|g| index >> (m - 1 - g) & 1 == 1).collect()
}

/// All outcomes of `psi`, one per misfire pattern, in pattern-lexicographic
/// order (false before true, first gate most significant).
pub fn outcomes(psi: &Formula, max_gates: usize) -> Result<Outcomes<'_>> {
    let m = check_gates(psi, max_gates)?;
    Ok(Outcomes {
        psi,
        m,
        terms: (0..=m).map(|l| binomial_term(m, l)).collect(),
        next: 0,
        end: 1u64 << m,
    })
}

pub struct Outcomes<'a> {
    psi: &'a Formula,
    m: usize,
    terms: Vec<Polynomial>,
    next: u64,
    end: u64,
}

impl Iterator for Outcomes<'_> {
    type Item = Outcome;

    fn next(&mut self) -> Option<Outcome> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        self.next += 1;
        let pattern = pattern_from_index(self.m, index);
        let correct = self.m - index.count_ones() as usize;
        let formula = self.psi.apply_pattern(&pattern).expect("width matches");
        Some(Outcome {
            formula,
            pattern,
            probability: self.terms[correct].clone(),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.end - self.next).ok();
        (n.unwrap_or(usize::MAX), n)
    }
}
