//! Optimal success rate.
//!
//! The best ambition achievable at rate `nu` is `g(nu) = min_v P_v(nu)`
//! (capped at 1), so the optimum is the maximum of that lower envelope over
//! (1/2, 1]. It exists only if the supremum is reached inside the interval
//! and exceeds 1/2.

use std::cmp::Ordering;

use num_traits::{One, Signed};

use super::Reasoner;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::kernel::envelope::envelope_at_rational;
use crate::kernel::rational::{half, simplest_in_closed};
use crate::kernel::{lower_envelope_max, AlgebraicNumber, Interval, Polynomial, Rational};

#[derive(Clone, Debug)]
pub struct Optimum {
    pub feasible: bool,
    pub attained: bool,
    /// Supremum of the envelope over (1/2, 1].
    pub sup: AlgebraicNumber,
    /// Where the supremum sits; an excluded endpoint when not attained.
    pub argmax: AlgebraicNumber,
    /// Rational `(nu, mu)` with `mu <= P_v(nu)` for every `v` and
    /// `sup - mu <= eps`; present when feasible.
    pub certified_pair: Option<(Rational, Rational)>,
    pub diagnostic: String,
    /// The envelope's member polynomials.
    pub polys: Vec<Polynomial>,
}

impl Optimum {
    pub fn nu_star(&self) -> Option<&AlgebraicNumber> {
        self.feasible.then_some(&self.argmax)
    }

    pub fn mu_star(&self) -> Option<&AlgebraicNumber> {
        self.feasible.then_some(&self.sup)
    }
}

pub(crate) fn describe(a: &AlgebraicNumber) -> String {
    match a.as_rational() {
        Some(r) => r.to_string(),
        None => format!("~{}", a.to_decimal(6)),
    }
}

/// A rational rate near `argmax` whose envelope value is within `eps` of
/// `sup` and above 1/2.
fn certify(
    polys: &[Polynomial],
    sup: &AlgebraicNumber,
    argmax: &AlgebraicNumber,
    eps: &Rational,
) -> (Rational, Rational) {
    if let Some(nu) = argmax.as_rational() {
        let mu = envelope_at_rational(polys, nu);
        return (nu.clone(), mu);
    }
    let h = half();
    let mut x = argmax.clone();
    loop {
        let (lo, hi) = x.bounds();
        let nu = simplest_in_closed(lo, hi);
        if nu > h && nu <= Rational::one() {
            let mu = envelope_at_rational(polys, &nu);
            if mu > h && sup.cmp_rational(&(&mu + eps)) != Ordering::Greater {
                return (nu, mu);
            }
        }
        let w = x.bounds().1 - x.bounds().0;
        x.refine_to_width(&(w / Rational::from_integer(2.into())));
    }
}

impl Reasoner {
    pub fn optimize(&self, psi: &Formula, eps: &Rational) -> Result<Optimum> {
        if !eps.is_positive() {
            return Err(Error::InvalidArgument("eps must be positive".into()));
        }
        let table = self.success_table(psi)?;
        let mut polys = table.distinct();
        if !polys.contains(&Polynomial::one()) {
            polys.push(Polynomial::one());
        }
        let m = lower_envelope_max(&polys, &Interval::unit_rate())?;
        let above_half = m.sup.cmp_rational(&half()) == Ordering::Greater;
        let feasible = m.attained && above_half;
        let diagnostic = if !above_half {
            format!("sup {} <= 1/2", describe(&m.sup))
        } else if !m.attained {
            format!(
                "supremum {} approached as nu -> {}+, not attained",
                describe(&m.sup),
                describe(&m.argmax)
            )
        } else {
            format!(
                "maximum {} attained at nu = {}",
                describe(&m.sup),
                describe(&m.argmax)
            )
        };
        let certified_pair = feasible.then(|| certify(&polys, &m.sup, &m.argmax, eps));
        Ok(Optimum {
            feasible,
            attained: m.attained,
            sup: m.sup,
            argmax: m.argmax,
            certified_pair,
            diagnostic,
            polys,
        })
    }
}
