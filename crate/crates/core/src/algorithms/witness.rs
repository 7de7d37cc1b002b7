//! Satisfying interpretations: the witness search and the plain
//! satisfiability check built on the same per-valuation test.

use num_bigint::BigInt;
use num_traits::One;

use super::{start_index, visiting_order, Reasoner};
use crate::error::Result;
use crate::formula::{Formula, Valuation};
use crate::kernel::rational::half;
use crate::kernel::{exists_sat, Interval, Polynomial, Rational, Relation, SignCondition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PmcMode {
    /// Scan `nu = n/d` for `d = 3, 4, ...` once the kernel has confirmed a
    /// rate exists.
    #[default]
    Faithful,
    /// Use the kernel's own witness.
    Fast,
}

/// `(v, nu, mu)` with `1/2 < nu, mu <= 1` and `mu <= P_v(nu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub valuation: Valuation,
    pub nu: Rational,
    pub mu: Rational,
}

enum Check {
    AtOne(Rational),
    Inside(Option<Rational>),
    Fails,
}

fn check(p: &Polynomial) -> Check {
    let at_one = p.eval(&Rational::one());
    if at_one > half() {
        return Check::AtOne(at_one);
    }
    // The interior query keeps the strict `nu < 1`.
    let half_p = Polynomial::constant(half());
    let conds = [
        SignCondition::compare(p, Relation::Gt, &half_p),
        SignCondition::compare(&Polynomial::one(), Relation::Gt, p),
    ];
    let res = exists_sat(&conds, &Interval::open(half(), Rational::one()));
    if res.satisfiable {
        Check::Inside(res.witness)
    } else {
        Check::Fails
    }
}

/// First `n/d` in the order `d = 3, 4, ...`, `n` from `ceil((d+1)/2)` to
/// `d - 1`, with `P(n/d) > 1/2`. Only called once such a rate is known to
/// exist, so it terminates.
fn scan(p: &Polynomial) -> Rational {
    let h = half();
    let mut d: u64 = 3;
    loop {
        for n in (d + 2) / 2..d {
            let nu = Rational::new(BigInt::from(n), BigInt::from(d));
            if p.eval(&nu) > h {
                return nu;
            }
        }
        d += 1;
    }
}

impl Reasoner {
    /// Searches valuations in canonical order (after `start`, if given) for
    /// a satisfying interpretation.
    pub fn witness(
        &self,
        psi: &Formula,
        mode: PmcMode,
        start: Option<&Valuation>,
    ) -> Result<Option<Witness>> {
        let c = self.prepare(psi)?;
        let n = c.vars().len();
        let start = start_index(&c, start)?;
        for idx in visiting_order(n, start) {
            let valuation = Valuation::nth(c.vars(), idx);
            let p = c.success_polynomial_for(&c.values(&valuation)?);
            let nu = match check(&p) {
                Check::AtOne(mu) => {
                    return Ok(Some(Witness {
                        valuation,
                        nu: Rational::one(),
                        mu,
                    }))
                }
                Check::Fails => continue,
                Check::Inside(w) => match mode {
                    PmcMode::Faithful => scan(&p),
                    PmcMode::Fast => w.unwrap_or_else(|| scan(&p)),
                },
            };
            let mu = p.eval(&nu);
            return Ok(Some(Witness { valuation, nu, mu }));
        }
        Ok(None)
    }

    /// Whether some interpretation satisfies `psi`.
    pub fn satisfiable(&self, psi: &Formula) -> Result<bool> {
        let c = self.prepare(psi)?;
        let n = c.vars().len();
        for idx in visiting_order(n, None) {
            let p = c.success_polynomial_for(&super::bits(n, idx));
            if !matches!(check(&p), Check::Fails) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
