//! Maximum of the lower envelope `g(nu) = min_i P_i(nu)` of finitely many
//! polynomials over an interval.
//!
//! `g` is piecewise polynomial and continuous, so its maximum over the
//! closure of the interval sits at an endpoint, at a critical point of one
//! of the `P_i`, or where two of them cross. Every candidate is an algebraic
//! number and every comparison below is exact.

use std::cmp::Ordering;

use super::algebraic::{simplest_between, AlgebraicNumber};
use super::interval::Interval;
use super::poly::Polynomial;
use super::rational::Rational;
use super::sat::distinct_sorted_roots;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct EnvelopeMax {
    /// Supremum of `g` over the interval (its maximum over the closure).
    pub sup: AlgebraicNumber,
    /// Where the supremum is reached: inside the interval when `attained`,
    /// otherwise at an excluded endpoint.
    pub argmax: AlgebraicNumber,
    pub attained: bool,
}

/// Value of the envelope at a point, as an algebraic number.
pub fn envelope_at(polys: &[Polynomial], x: &AlgebraicNumber) -> AlgebraicNumber {
    if let Some(r) = x.as_rational() {
        let v = polys.iter().map(|p| p.eval(r)).min().expect("nonempty");
        return AlgebraicNumber::from_rational(v);
    }
    let mut best = 0;
    for j in 1..polys.len() {
        // P_j(x) < P_best(x)  iff  sign(P_j - P_best) < 0
        if x.sign_of(&(&polys[j] - &polys[best])) < 0 {
            best = j;
        }
    }
    x.eval_poly(&polys[best])
}

pub fn envelope_at_rational(polys: &[Polynomial], x: &Rational) -> Rational {
    polys.iter().map(|p| p.eval(x)).min().expect("nonempty")
}

pub fn lower_envelope_max(polys: &[Polynomial], i: &Interval) -> Result<EnvelopeMax> {
    if polys.is_empty() {
        return Err(Error::InvalidArgument(
            "lower envelope of an empty polynomial set".into(),
        ));
    }
    let mut distinct: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    let polys = distinct;
    let closure = i.closure();

    let mut critical: Vec<Polynomial> = polys.iter().map(|p| p.derivative()).collect();
    for a in 0..polys.len() {
        for b in a + 1..polys.len() {
            critical.push(&polys[a] - &polys[b]);
        }
    }
    let mut points = distinct_sorted_roots(critical.iter(), &closure);
    let lo = AlgebraicNumber::from_rational(i.lo.clone());
    let hi = AlgebraicNumber::from_rational(i.hi.clone());
    points.retain(|p| p.cmp(&lo) != Ordering::Equal && p.cmp(&hi) != Ordering::Equal);
    points.insert(0, lo);
    if !i.is_point() {
        points.push(hi);
    }

    // A constant piece of the envelope can hold its maximum on a whole
    // sub-interval, so one sample strictly between neighbouring candidates
    // is also examined.
    let mut samples: Vec<(AlgebraicNumber, bool)> = Vec::new();
    for (k, p) in points.iter().enumerate() {
        let inside = match p.as_rational() {
            Some(r) => i.contains(r),
            None => true,
        };
        samples.push((p.clone(), inside));
        if let Some(next) = points.get(k + 1) {
            let s = simplest_between(p, next);
            samples.push((AlgebraicNumber::from_rational(s), true));
        }
    }

    let values: Vec<AlgebraicNumber> = samples
        .iter()
        .map(|(x, _)| envelope_at(&polys, x))
        .collect();
    let mut best = 0;
    for k in 1..values.len() {
        if values[k] > values[best] {
            best = k;
        }
    }
    let sup = values[best].clone();
    let attaining: Vec<usize> = (0..values.len())
        .filter(|&k| values[k].cmp(&sup) == Ordering::Equal)
        .collect();
    let inside = attaining.iter().copied().find(|&k| samples[k].1);
    let (argmax, attained) = match inside {
        Some(k) => (samples[k].0.clone(), true),
        None => (samples[attaining[0]].0.clone(), false),
    };
    Ok(EnvelopeMax {
        sup,
        argmax,
        attained,
    })
}
