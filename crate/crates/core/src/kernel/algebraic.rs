//! Real algebraic numbers: a square-free defining polynomial plus an
//! isolating interval.
//!
//! Two shapes are kept. A rational number is a point interval with defining
//! polynomial `nu - r`. Anything else carries an open interval `(lo, hi)`
//! with the defining polynomial nonzero and of opposite signs at both ends,
//! so refinement is plain sign bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::poly::{integer_sign_at, Polynomial};
use super::rational::{simplest_in_closed, to_decimal, Rational};
use super::sturm::{count_roots, SturmSequence};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    defining: Polynomial,
    isolating: Interval,
    // integer form of `defining`, for fast sign tests
    ints: Vec<BigInt>,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        let defining = Polynomial::new(vec![-r.clone(), Rational::one()]);
        Self::make(defining, Interval::point(r))
    }

    fn make(defining: Polynomial, isolating: Interval) -> Self {
        let ints = defining.integer_form();
        AlgebraicNumber {
            defining,
            isolating,
            ints,
        }
    }

    fn def_sign(&self, x: &Rational) -> i8 {
        integer_sign_at(&self.ints, x)
    }

    /// The unique root of `poly` inside `interval`.
    pub fn from_root(poly: &Polynomial, interval: &Interval) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidArgument(
                "the zero polynomial defines no algebraic number".into(),
            ));
        }
        let seq = SturmSequence::new(poly);
        let n = seq.count(interval);
        if n != 1 {
            return Err(Error::InvalidArgument(format!(
                "{} has {} roots in {}, expected exactly one",
                poly, n, interval
            )));
        }
        let p = seq.base().clone();
        Ok(Self::normalize(p, interval.clone(), &seq))
    }

    fn normalize(p: Polynomial, mut iv: Interval, seq: &SturmSequence) -> Self {
        if p.degree() == Some(1) {
            let r = -p.coeff(0) / p.coeff(1);
            return Self::from_rational(r);
        }
        if iv.is_point() {
            return Self::from_rational(iv.lo);
        }
        if !iv.lo_open && seq.base_sign(&iv.lo) == 0 {
            return Self::from_rational(iv.lo);
        }
        if !iv.hi_open && seq.base_sign(&iv.hi) == 0 {
            return Self::from_rational(iv.hi);
        }
        // Root is now strictly inside; pull any endpoint that is itself a root
        // (excluded by openness) inward.
        while seq.base_sign(&iv.lo) == 0 || seq.base_sign(&iv.hi) == 0 {
            let m = iv.midpoint();
            if seq.base_sign(&m) == 0 {
                return Self::from_rational(m);
            }
            let left = Interval::open(iv.lo.clone(), m.clone());
            if seq.count(&left) == 1 {
                iv = left;
            } else {
                iv = Interval::open(m, iv.hi.clone());
            }
        }
        let iv = Interval::open(iv.lo, iv.hi);
        let mut a = Self::make(p, iv);
        if let Some(r) = a.detect_rational() {
            return Self::from_rational(r);
        }
        a
    }

    /// A rational root has denominator dividing the leading coefficient of the
    /// primitive integer form, so two candidates are at least `1/lead^2` apart.
    /// Shrink below that and test the simplest rational left in the interval.
    fn detect_rational(&mut self) -> Option<Rational> {
        let lead = self.ints.last()?.abs();
        let bound = Rational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
        while self.isolating.width() >= bound {
            self.bisect();
            if self.is_rational() {
                return self.as_rational().cloned();
            }
        }
        let cand = simplest_in_closed(&self.isolating.lo, &self.isolating.hi);
        if cand.denom() <= &lead && self.def_sign(&cand) == 0 {
            Some(cand)
        } else {
            None
        }
    }

    pub fn defining(&self) -> &Polynomial {
        &self.defining
    }

    pub fn isolating(&self) -> &Interval {
        &self.isolating
    }

    pub fn is_rational(&self) -> bool {
        self.isolating.is_point()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.isolating.lo)
        } else {
            None
        }
    }

    /// Lower and upper rational bounds of the current enclosure.
    pub fn bounds(&self) -> (&Rational, &Rational) {
        (&self.isolating.lo, &self.isolating.hi)
    }

    fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let m = self.isolating.midpoint();
        let sm = self.def_sign(&m);
        if sm == 0 {
            *self = Self::from_rational(m);
            return;
        }
        let slo = self.def_sign(&self.isolating.lo);
        if sm == slo {
            self.isolating.lo = m;
        } else {
            self.isolating.hi = m;
        }
    }

    /// A copy with the isolating interval halved.
    pub fn refined(&self) -> Self {
        let mut a = self.clone();
        a.bisect();
        a
    }

    pub fn refine_to_width(&mut self, width: &Rational) {
        while !self.is_rational() && &self.isolating.width() > width {
            self.bisect();
        }
    }

    /// A rational within `eps` of the number.
    pub fn approximate(&self, eps: &Rational) -> Rational {
        assert!(
            eps.is_positive(),
            "approximation tolerance must be positive"
        );
        let mut a = self.clone();
        a.refine_to_width(eps);
        match a.as_rational() {
            Some(r) => r.clone(),
            None => a.isolating.midpoint(),
        }
    }

    pub fn to_decimal(&self, places: usize) -> String {
        let eps = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), places + 2));
        to_decimal(&self.approximate(&eps), places)
    }

    pub fn neg(&self) -> Self {
        match self.as_rational() {
            Some(r) => Self::from_rational(-r),
            None => Self::make(
                self.defining.reflect(),
                Interval::open(-&self.isolating.hi, -&self.isolating.lo),
            ),
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let mut a = self.clone();
        a.cmp_rational_mut(r)
    }

    /// Like [`cmp_rational`](Self::cmp_rational) but keeps the refinement.
    pub fn cmp_rational_mut(&mut self, r: &Rational) -> Ordering {
        loop {
            if let Some(x) = self.as_rational() {
                return x.cmp(r);
            }
            let (lo, hi) = self.bounds();
            if r <= lo {
                return Ordering::Greater;
            }
            if r >= hi {
                return Ordering::Less;
            }
            if self.def_sign(r) == 0 {
                return Ordering::Equal;
            }
            self.bisect();
        }
    }

    /// Exact sign of `q` at this number.
    pub fn sign_of(&self, q: &Polynomial) -> i8 {
        if let Some(r) = self.as_rational() {
            return q.sign_at(r);
        }
        if q.is_constant() {
            return q.sign_at(&Rational::zero());
        }
        let g = self.defining.gcd(q);
        if !g.is_constant() && count_roots(&g, &self.isolating) > 0 {
            return 0;
        }
        let seq = SturmSequence::new(q);
        let mut a = self.clone();
        while !a.is_rational() && seq.count(&a.isolating.closure()) > 0 {
            a.bisect();
        }
        match a.as_rational() {
            Some(r) => q.sign_at(r),
            None => q.sign_at(&a.isolating.midpoint()),
        }
    }

    /// The algebraic number `q(self)`.
    ///
    /// Its defining polynomial is the characteristic polynomial of
    /// multiplication by `q` in `Q[x]/(defining)`; the root is picked out with
    /// an interval-arithmetic enclosure of `q` over the refined isolating
    /// interval.
    pub fn eval_poly(&self, q: &Polynomial) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(q.eval(r));
        }
        if q.is_constant() {
            return Self::from_rational(q.coeff(0));
        }
        let q = q.rem(&self.defining);
        if q.is_constant() {
            return Self::from_rational(q.coeff(0));
        }
        let chi = multiplication_charpoly(&self.defining, &q);
        let seq = SturmSequence::new(&chi);
        let mut a = self.clone();
        loop {
            if let Some(r) = a.as_rational() {
                return Self::from_rational(q.eval(r));
            }
            let (lo, hi) = enclose(&q, &a.isolating.lo, &a.isolating.hi);
            let e = Interval::closed(lo, hi);
            if seq.count(&e) == 1 {
                return Self::normalize(seq.base().clone(), e, &seq);
            }
            a.bisect();
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    /// Equality is certified through the gcd of the defining polynomials:
    /// both numbers must be roots of it and the hull of their enclosures must
    /// hold exactly one of its roots. Inequality falls out of refinement until
    /// the enclosures separate.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (None, Some(b)) => return self.cmp_rational(b),
            (Some(a), None) => return other.cmp_rational(a).reverse(),
            (None, None) => {}
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let g = a.defining.gcd(&b.defining);
        let shared = !g.is_constant()
            && count_roots(&g, &a.isolating) == 1
            && count_roots(&g, &b.isolating) == 1;
        let g_seq = if shared {
            Some(SturmSequence::new(&g))
        } else {
            None
        };
        loop {
            match (a.as_rational().cloned(), b.as_rational().cloned()) {
                (Some(x), Some(y)) => return x.cmp(&y),
                (None, Some(y)) => return a.cmp_rational_mut(&y),
                (Some(x), None) => return b.cmp_rational_mut(&x).reverse(),
                (None, None) => {}
            }
            // Both enclosures are open here, so touching ends already separate.
            if a.bounds().1 <= b.bounds().0 {
                return Ordering::Less;
            }
            if b.bounds().1 <= a.bounds().0 {
                return Ordering::Greater;
            }
            if let Some(seq) = &g_seq {
                let lo = a.bounds().0.min(b.bounds().0).clone();
                let hi = a.bounds().1.max(b.bounds().1).clone();
                if seq.count(&Interval::closed(lo, hi)) == 1 {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", r),
            None => write!(f, "root of {} in {}", self.defining, self.isolating),
        }
    }
}

/// Closed enclosure of `q` over `[lo, hi]` by Horner's rule in exact interval
/// arithmetic.
pub fn enclose(q: &Polynomial, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc_lo = Rational::zero();
    let mut acc_hi = Rational::zero();
    for c in q.coeffs().iter().rev() {
        let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let min = products.iter().min().unwrap().clone();
        let max = products.iter().max().unwrap().clone();
        acc_lo = min + c;
        acc_hi = max + c;
    }
    (acc_lo, acc_hi)
}

/// Characteristic polynomial of `f -> q*f mod p` on `Q[x]/(p)`, by
/// Faddeev-LeVerrier.
#[allow(clippy::needless_range_loop)]
fn multiplication_charpoly(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let n = p.degree().expect("nonzero modulus");
    // Column j holds the coordinates of q * x^j mod p.
    let mut m = vec![vec![Rational::zero(); n]; n];
    let mut col = q.rem(p);
    let x = Polynomial::var();
    for j in 0..n {
        for i in 0..n {
            m[i][j] = col.coeff(i);
        }
        col = (&col * &x).rem(p);
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // mk = m * mk_prev + c_{n-k+1} I
        let prev = mk;
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    if !m[i][l].is_zero() && !prev[l][j].is_zero() {
                        s += &m[i][l] * &prev[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        // c_{n-k} = -tr(m * next) / k
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                if !m[i][l].is_zero() && !next[l][i].is_zero() {
                    tr += &m[i][l] * &next[l][i];
                }
            }
        }
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
        mk = next;
    }
    Polynomial::new(coeffs)
}

/// Smallest-denominator rational strictly between `a` and `b` (`a < b`),
/// found by walking the Stern-Brocot tree with galloping steps.
pub fn simplest_between(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Rational {
    let zero = Rational::zero();
    let mut a = a.clone();
    let mut b = b.clone();
    if a.cmp_rational_mut(&zero) == Ordering::Less && b.cmp_rational_mut(&zero) == Ordering::Greater
    {
        return zero;
    }
    if b.cmp_rational_mut(&zero) != Ordering::Greater {
        return -simplest_between(&b.neg(), &a.neg());
    }
    // 0 <= a < b
    let (mut lp, mut lq) = (BigInt::zero(), BigInt::one());
    let (mut rp, mut rq) = (BigInt::one(), BigInt::zero());
    loop {
        let m = Rational::new(&lp + &rp, &lq + &rq);
        if a.cmp_rational_mut(&m) != Ordering::Less {
            // m <= a: slide the left bound toward the right one.
            let k = gallop(|k| {
                let c = Rational::new(&lp + &rp * k, &lq + &rq * k);
                a.cmp_rational_mut(&c) != Ordering::Less
            });
            lp += &rp * &k;
            lq += &rq * &k;
        } else if b.cmp_rational_mut(&m) != Ordering::Greater {
            // m >= b
            let k = gallop(|k| {
                let c = Rational::new(&lp * k + &rp, &lq * k + &rq);
                b.cmp_rational_mut(&c) != Ordering::Greater
            });
            rp += &lp * &k;
            rq += &lq * &k;
        } else {
            return m;
        }
    }
}

/// Largest `k >= 1` with `pred(k)`, for a predicate that holds at 1 and is
/// monotone decreasing.
fn gallop(mut pred: impl FnMut(&BigInt) -> bool) -> BigInt {
    let mut good = BigInt::one();
    let mut step = BigInt::one();
    loop {
        let probe = &good + &step;
        if pred(&probe) {
            good = probe;
            step *= 2;
        } else {
            break;
        }
    }
    // pred(good) holds, pred(good + step) fails.
    let mut bad = &good + &step;
    while &bad - &good > BigInt::one() {
        let m = (&good + &bad) / 2;
        if pred(&m) {
            good = m;
        } else {
            bad = m;
        }
    }
    good
}
