//! Sturm sequences over the rationals: exact distinct-root counting and
//! isolation on intervals with either end open or closed.

use num_bigint::BigInt;

use super::interval::Interval;
use super::poly::{integer_sign_at, Polynomial};
use super::rational::Rational;

/// Sturm chain of the square-free part of a nonzero polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
    ints: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let base = p.square_free().sign_normalized();
        let mut chain = vec![base.clone()];
        if base.is_constant() {
            return Self::with_ints(chain);
        }
        chain.push(base.derivative().sign_normalized());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Scaling by a positive constant keeps the sign pattern.
            chain.push((-r).sign_normalized());
        }
        Self::with_ints(chain)
    }

    fn with_ints(chain: Vec<Polynomial>) -> Self {
        let ints = chain.iter().map(Polynomial::integer_form).collect();
        SturmSequence { chain, ints }
    }

    /// Sign of the base polynomial at `x`.
    pub fn base_sign(&self, x: &Rational) -> i8 {
        integer_sign_at(&self.ints[0], x)
    }

    /// The square-free polynomial the chain was built from.
    pub fn base(&self) -> &Polynomial {
        &self.chain[0]
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.ints {
            let s = integer_sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`, for `a < b`.
    fn count_left_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }

    pub fn count(&self, i: &Interval) -> usize {
        if i.is_point() {
            return usize::from(self.base_sign(&i.lo) == 0);
        }
        let mut n = self.count_left_open(&i.lo, &i.hi);
        if i.hi_open && self.base_sign(&i.hi) == 0 {
            n -= 1;
        }
        if !i.lo_open && self.base_sign(&i.lo) == 0 {
            n += 1;
        }
        n
    }

    /// Disjoint intervals, ordered left to right, each holding exactly one
    /// root of the base polynomial inside `i`. Rational roots hit by a
    /// bisection point come back as point intervals.
    pub fn isolate(&self, i: &Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        self.isolate_into(i, self.count(i), &mut out);
        out
    }

    fn isolate_into(&self, i: &Interval, n: usize, out: &mut Vec<Interval>) {
        match n {
            0 => {}
            1 => out.push(i.clone()),
            _ => {
                let m = i.midpoint();
                let left = Interval::new(i.lo.clone(), m.clone(), i.lo_open, true)
                    .expect("bisection keeps lo < m");
                let right = Interval::new(m.clone(), i.hi.clone(), true, i.hi_open)
                    .expect("bisection keeps m < hi");
                let nl = self.count(&left);
                let at_mid = usize::from(self.base_sign(&m) == 0);
                self.isolate_into(&left, nl, out);
                if at_mid == 1 {
                    out.push(Interval::point(m));
                }
                self.isolate_into(&right, n - nl - at_mid, out);
            }
        }
    }
}

/// Number of distinct real roots of a nonzero `p` in `i`.
pub fn count_roots(p: &Polynomial, i: &Interval) -> usize {
    if p.is_constant() {
        return 0;
    }
    SturmSequence::new(p).count(i)
}

/// Isolating intervals for the distinct roots of a nonzero `p` in `i`.
pub fn isolate_roots(p: &Polynomial, i: &Interval) -> Vec<Interval> {
    if p.is_constant() {
        return Vec::new();
    }
    SturmSequence::new(p).isolate(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn counts_plus_minus_sqrt2() {
        assert_eq!(
            count_roots(&p("nu^2 - 2"), &Interval::closed(int(-2), int(2))),
            2
        );
    }

    #[test]
    fn quadratic_threshold_in_unit_rate() {
        // roots (1 ± sqrt(2/5)) / 2, approximately 0.1838 and 0.8162
        assert_eq!(
            count_roots(&p("2*nu^2 - 2*nu + 3/10"), &Interval::unit_rate()),
            1
        );
    }

    #[test]
    fn excluded_endpoint_root() {
        assert_eq!(
            count_roots(&p("nu - 1"), &Interval::open(rat(1, 2), int(1))),
            0
        );
        assert_eq!(count_roots(&p("nu - 1"), &Interval::unit_rate()), 1);
        assert_eq!(count_roots(&p("nu - 1/2"), &Interval::unit_rate()), 0);
        assert_eq!(
            count_roots(&p("nu - 1/2"), &Interval::closed(rat(1, 2), int(1))),
            1
        );
    }

    #[test]
    fn multiplicities_are_counted_once() {
        let f = p("(nu - 1/3)^4 * (nu - 2/3)^2 * (nu + 5)");
        assert_eq!(count_roots(&f, &Interval::closed(int(-10), int(10))), 3);
        assert_eq!(count_roots(&f, &Interval::closed(int(0), int(1))), 2);
    }

    #[test]
    fn isolation_of_sqrt2_and_linear() {
        let iv = isolate_roots(&p("nu^2 - 2"), &Interval::left_open(int(0), int(2)));
        assert_eq!(iv.len(), 1);
        let r = &iv[0];
        assert!(r.width() <= int(2));
        assert!(&r.lo * &r.lo < int(2) || r.lo_open);
        let iv = isolate_roots(&p("4*nu - 2"), &Interval::open(int(0), int(1)));
        assert_eq!(iv.len(), 1);
        assert!(iv[0].contains(&rat(1, 2)));
    }

    #[test]
    fn isolating_intervals_are_disjoint_and_ordered() {
        let f = p("(nu - 1)*(nu - 2)*(nu - 3)*(nu^2 - 5)");
        let iv = isolate_roots(&f, &Interval::closed(int(-4), int(4)));
        assert_eq!(iv.len(), 5);
        for w in iv.windows(2) {
            assert!(w[0].hi <= w[1].lo);
            if w[0].hi == w[1].lo {
                assert!(w[0].hi_open || w[1].lo_open);
            }
        }
        for i in &iv {
            assert_eq!(count_roots(&f, i), 1);
        }
    }
}
