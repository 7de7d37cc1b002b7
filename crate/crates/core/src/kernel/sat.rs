//! Satisfiability of a conjunction of univariate sign conditions on an
//! interval, with a rational witness whenever the satisfying set has one.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::algebraic::{simplest_between, AlgebraicNumber};
use super::interval::Interval;
use super::poly::Polynomial;
use super::rational::Rational;
use super::sturm::isolate_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ne,
    Gt,
    Ge,
}

impl Relation {
    pub fn holds(self, sign: i8) -> bool {
        match self {
            Relation::Lt => sign < 0,
            Relation::Le => sign <= 0,
            Relation::Eq => sign == 0,
            Relation::Ne => sign != 0,
            Relation::Gt => sign > 0,
            Relation::Ge => sign >= 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

/// `poly relation 0`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignCondition {
    pub poly: Polynomial,
    pub relation: Relation,
}

impl SignCondition {
    pub fn new(poly: Polynomial, relation: Relation) -> Self {
        SignCondition { poly, relation }
    }

    /// `lhs relation rhs`, moved to the form `lhs - rhs relation 0`.
    pub fn compare(lhs: &Polynomial, relation: Relation, rhs: &Polynomial) -> Self {
        SignCondition::new(lhs - rhs, relation)
    }

    pub fn holds_at(&self, x: &Rational) -> bool {
        self.relation.holds(self.poly.sign_at(x))
    }

    fn holds_at_algebraic(&self, x: &AlgebraicNumber) -> bool {
        self.relation.holds(x.sign_of(&self.poly))
    }
}

impl fmt::Display for SignCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} 0", self.poly, self.relation.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatResult {
    pub satisfiable: bool,
    pub witness: Option<Rational>,
}

impl SatResult {
    fn unsat() -> Self {
        SatResult {
            satisfiable: false,
            witness: None,
        }
    }
}

/// All distinct roots of the given polynomials inside `i`, sorted.
pub fn distinct_sorted_roots<'a>(
    polys: impl IntoIterator<Item = &'a Polynomial>,
    i: &Interval,
) -> Vec<AlgebraicNumber> {
    let mut roots: Vec<AlgebraicNumber> = Vec::new();
    for p in polys {
        if p.is_constant() {
            continue;
        }
        for iv in isolate_roots(p, i) {
            let a = AlgebraicNumber::from_root(p, &iv).expect("isolating interval holds one root");
            roots.push(a);
        }
    }
    roots.sort();
    roots.dedup_by(|a, b| Ord::cmp(&*a, &*b) == Ordering::Equal);
    roots
}

/// Decides `exists nu in i. /\ conds` exactly.
///
/// The interval is cut at every root of every condition polynomial; each
/// open cell is tested at one rational sample and each cut point directly.
/// The witness comes from the widest satisfying open cell (leftmost on ties)
/// and is the simplest rational in it. When only isolated points satisfy the
/// conjunction, a witness is reported only if one of them is rational.
pub fn exists_sat(conds: &[SignCondition], i: &Interval) -> SatResult {
    let mut live = Vec::new();
    for c in conds {
        if c.poly.is_constant() {
            if !c.relation.holds(c.poly.sign_at(&Rational::zero())) {
                return SatResult::unsat();
            }
        } else {
            live.push(c);
        }
    }

    let roots = distinct_sorted_roots(live.iter().map(|c| &c.poly), i);

    // Cut points in order: closed ends of `i`, then interior roots.
    let lo = AlgebraicNumber::from_rational(i.lo.clone());
    let hi = AlgebraicNumber::from_rational(i.hi.clone());
    if i.is_point() {
        let ok = live.iter().all(|c| c.holds_at(&i.lo));
        return SatResult {
            satisfiable: ok,
            witness: ok.then(|| i.lo.clone()),
        };
    }

    let mut bounds: Vec<AlgebraicNumber> = Vec::with_capacity(roots.len() + 2);
    bounds.push(lo.clone());
    for r in roots {
        let at_lo = r.cmp(&lo) == Ordering::Equal;
        let at_hi = r.cmp(&hi) == Ordering::Equal;
        if !at_lo && !at_hi {
            bounds.push(r);
        }
    }
    bounds.push(hi.clone());

    let mut best: Option<(Rational, Rational)> = None; // (approx width, witness)
    let mut point_sat = false;
    let mut point_witness: Option<Rational> = None;

    let width_eps = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
    for w in bounds.windows(2) {
        let sample = simplest_between(&w[0], &w[1]);
        if live.iter().all(|c| c.holds_at(&sample)) {
            let width = w[1].approximate(&width_eps) - w[0].approximate(&width_eps);
            let better = match &best {
                None => true,
                Some((bw, _)) => width > *bw,
            };
            if better {
                best = Some((width, sample));
            }
        }
    }

    let n = bounds.len();
    for (idx, b) in bounds.iter().enumerate() {
        if idx == 0 && i.lo_open || idx == n - 1 && i.hi_open {
            continue;
        }
        if live.iter().all(|c| c.holds_at_algebraic(b)) {
            point_sat = true;
            if point_witness.is_none() {
                point_witness = b.as_rational().cloned();
            }
        }
    }

    match best {
        Some((_, w)) => SatResult {
            satisfiable: true,
            witness: Some(w),
        },
        None if point_sat => SatResult {
            satisfiable: true,
            witness: point_witness,
        },
        None => SatResult::unsat(),
    }
}
