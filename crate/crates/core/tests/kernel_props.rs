mod common;

use num_traits::Signed;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use ucl_core::kernel::{
    count_roots, exists_sat, isolate_roots, lower_envelope_max, AlgebraicNumber, Interval,
    Polynomial, Rational, Relation, SignCondition,
};

const RELATIONS: [Relation; 6] = [
    Relation::Lt,
    Relation::Le,
    Relation::Eq,
    Relation::Ne,
    Relation::Gt,
    Relation::Ge,
];

/// Integer polynomial: either random coefficients or a product of linear
/// factors `8x - k`, so that roots on the eighth grid occur often.
fn random_int_poly(rng: &mut StdRng, max_degree: usize, max_coeff: i64) -> Vec<i64> {
    if rng.gen_bool(0.5) {
        let d = rng.gen_range(1..=max_degree);
        let mut c: Vec<i64> = (0..=d)
            .map(|_| rng.gen_range(-max_coeff..=max_coeff))
            .collect();
        if c[d] == 0 {
            c[d] = 1;
        }
        c
    } else {
        let d = rng.gen_range(1..=max_degree.min(4));
        let mut c = vec![rng.gen_range(1..=3)];
        for _ in 0..d {
            let k = rng.gen_range(-12..=12);
            let mut next = vec![0; c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i] -= a * k;
                next[i + 1] += a * 8;
            }
            c = next;
        }
        c
    }
}

fn to_poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

/// Sign of `c` at `n / den`, exactly, in 128-bit arithmetic.
fn sign_i128(c: &[i64], n: i128, den: i128) -> i8 {
    let mut acc: i128 = 0;
    let mut dp: i128 = 1;
    for (i, &a) in c.iter().enumerate().rev() {
        if i + 1 == c.len() {
            acc = a as i128;
        } else {
            dp *= den;
            acc = acc * n + a as i128 * dp;
        }
    }
    acc.signum() as i8
}

const GRID: i64 = 80_000;

fn grid_points(i: &Interval) -> impl Iterator<Item = i64> + '_ {
    let lo = (to_f64(&i.lo) * GRID as f64).round() as i64;
    let hi = (to_f64(&i.hi) * GRID as f64).round() as i64;
    (lo..=hi).filter(move |&n| i.contains(&rat(n, GRID)))
}

fn eighth_interval(rng: &mut StdRng, lo: i64, hi: i64) -> Interval {
    loop {
        let a = rng.gen_range(lo..=hi);
        let b = rng.gen_range(lo..=hi);
        if a < b {
            return Interval::new(rat(a, 8), rat(b, 8), rng.gen_bool(0.5), rng.gen_bool(0.5))
                .unwrap();
        }
    }
}

#[test]
fn exists_sat_sound_and_grid_complete() {
    let mut rng = StdRng::seed_from_u64(0x5A7);
    let mut grid_sat = 0;
    for case in 0..60 {
        let n = rng.gen_range(1..=3);
        let raw: Vec<(Vec<i64>, Relation)> = (0..n)
            .map(|_| {
                (
                    random_int_poly(&mut rng, 5, 16),
                    RELATIONS[rng.gen_range(0..6)],
                )
            })
            .collect();
        let conds: Vec<SignCondition> = raw
            .iter()
            .map(|(c, r)| SignCondition::new(to_poly(c), *r))
            .collect();
        let i = if case % 3 == 0 {
            Interval::left_open(rat(1, 2), int(1))
        } else {
            eighth_interval(&mut rng, -12, 12)
        };
        let res = exists_sat(&conds, &i);
        if let Some(w) = &res.witness {
            assert!(res.satisfiable);
            assert!(i.contains(w), "witness {} outside {}", w, i);
            for c in &conds {
                assert!(c.holds_at(w), "witness {} fails {}", w, c);
            }
        }
        let hit = grid_points(&i).find(|&x| {
            raw.iter()
                .all(|(c, r)| r.holds(sign_i128(c, x as i128, GRID as i128)))
        });
        if let Some(x) = hit {
            grid_sat += 1;
            assert!(
                res.satisfiable,
                "grid point {}/{} satisfies {:?} on {}",
                x, GRID, conds, i
            );
        }
        if res.satisfiable && res.witness.is_none() {
            // only irrational isolated points satisfy the system
            assert!(conds.iter().any(|c| c.relation == Relation::Eq));
        }
    }
    assert!(grid_sat > 10, "too few satisfiable instances: {}", grid_sat);
}

fn sign_at_f64(c: &[i64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a as f64)
}

#[test]
fn isolation_intervals_are_sound_and_disjoint() {
    let mut rng = StdRng::seed_from_u64(0x150);
    for _ in 0..300 {
        let c = random_int_poly(&mut rng, 8, 20);
        let p = to_poly(&c);
        let i = eighth_interval(&mut rng, -24, 24);
        let sf = p.square_free();
        let ivs = isolate_roots(&p, &i);
        assert_eq!(ivs.len(), count_roots(&p, &i));
        for iv in &ivs {
            assert!(iv.lo >= i.lo && iv.hi <= i.hi);
            if iv.is_point() {
                assert_eq!(p.sign_at(&iv.lo), 0);
                assert!(i.contains(&iv.lo));
                continue;
            }
            // A root sitting on an excluded endpoint is divided out first.
            let mut q = sf.clone();
            for (e, open) in [(&iv.lo, iv.lo_open), (&iv.hi, iv.hi_open)] {
                if open && q.sign_at(e) == 0 {
                    let lin = Polynomial::new(vec![-e.clone(), int(1)]);
                    let (quot, rem) = q.div_rem(&lin);
                    assert!(rem.is_zero());
                    q = quot;
                }
            }
            let (a, b) = (q.sign_at(&iv.lo), q.sign_at(&iv.hi));
            let endpoint_root = (a == 0 && !iv.lo_open) || (b == 0 && !iv.hi_open);
            assert!(
                a * b < 0 || endpoint_root,
                "{} on {} has no sign change",
                sf,
                iv
            );
        }
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
            if w[0].hi == w[1].lo {
                assert!(w[0].hi_open || w[1].lo_open);
            }
        }
    }
}

fn envelope_f64(polys: &[Vec<i64>], x: f64) -> f64 {
    polys
        .iter()
        .map(|c| sign_at_f64(c, x))
        .fold(f64::INFINITY, f64::min)
}

fn zoom_max(polys: &[Vec<i64>], center: f64, lo: f64, hi: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    let mut c = center;
    let mut h = (hi - lo) / 100.0;
    for _ in 0..8 {
        let mut arg = c;
        for k in -200..=200 {
            let x = (c + h * k as f64 / 100.0).clamp(lo, hi);
            let y = envelope_f64(polys, x);
            if y > best {
                best = y;
                arg = x;
            }
        }
        c = arg;
        h /= 20.0;
    }
    best
}

#[test]
fn envelope_max_dominates_and_matches_grid() {
    let mut rng = StdRng::seed_from_u64(0xE4);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let raw: Vec<Vec<i64>> = (0..n).map(|_| random_int_poly(&mut rng, 8, 8)).collect();
        let polys: Vec<Polynomial> = raw.iter().map(|c| to_poly(c)).collect();
        let i = eighth_interval(&mut rng, -8, 8);
        let (lo, hi) = (to_f64(&i.lo), to_f64(&i.hi));
        let m = lower_envelope_max(&polys, &i).unwrap();
        let sup = to_f64(&m.sup.approximate(&rat(1, 1_000_000_000)));
        let mut grid_best = f64::NEG_INFINITY;
        let mut grid_arg = lo;
        for k in 0..=10_000 {
            let x = lo + (hi - lo) * k as f64 / 10_000.0;
            let y = envelope_f64(&raw, x);
            assert!(
                y <= sup + 1e-9 * (1.0 + sup.abs()),
                "g({}) = {} above sup {}",
                x,
                y,
                sup
            );
            if y > grid_best {
                grid_best = y;
                grid_arg = x;
            }
        }
        let arg = to_f64(&m.argmax.approximate(&rat(1, 1_000_000_000)));
        let refined = zoom_max(&raw, grid_arg, lo, hi).max(zoom_max(&raw, arg, lo, hi));
        assert!(refined <= sup + 1e-9 * (1.0 + sup.abs()));
        assert!(
            sup - refined <= 1e-6,
            "sup {} vs refined grid max {}",
            sup,
            refined
        );
        assert!(m.attained || !i.contains(m.argmax.as_rational().unwrap()));
    }
}

fn sqrt2() -> AlgebraicNumber {
    AlgebraicNumber::from_root(&p("nu^2 - 2"), &Interval::open(int(1), int(2))).unwrap()
}

#[test]
fn approximate_examples() {
    let r = sqrt2().approximate(&rat(1, 1000));
    assert!((to_f64(&r) - 2f64.sqrt()).abs() <= 1e-3);
    // independent bisection on nu^2 - 2
    let (mut a, mut b) = (1.0f64, 2.0f64);
    for _ in 0..60 {
        let m = (a + b) / 2.0;
        if m * m < 2.0 {
            a = m;
        } else {
            b = m;
        }
    }
    assert!((to_f64(&r) - a).abs() <= 1e-3);

    let q = AlgebraicNumber::from_root(
        &p("2*nu^2 - 2*nu + 3/10"),
        &Interval::open(rat(1, 2), int(1)),
    )
    .unwrap();
    let r = q.approximate(&rat(1, 10_000));
    let exact = (1.0 + (1.0f64 - 0.6).sqrt()) / 2.0;
    assert!((to_f64(&r) - exact).abs() <= 1e-4);
    assert!((exact - 0.81623).abs() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn approximate_converges(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = random_int_poly(&mut rng, 6, 12);
        let poly = to_poly(&c);
        let ivs = isolate_roots(&poly, &Interval::closed(int(-4), int(4)));
        prop_assume!(!ivs.is_empty());
        let a = AlgebraicNumber::from_root(&poly, &ivs[rng.gen_range(0..ivs.len())]).unwrap();
        let mut eps = rat(1, 4);
        let mut prev = a.approximate(&eps);
        for _ in 0..30 {
            let half = &eps / int(2);
            let next = a.approximate(&half);
            let moved: Rational = &next - &prev;
            prop_assert!(moved.abs() <= eps, "moved {} with eps {}", moved, eps);
            // the answer is a rational within eps of a root of the polynomial
            let (l, h) = (&next - &half, &next + &half);
            prop_assert!(count_roots(&poly, &Interval::closed(l, h)) > 0);
            prev = next;
            eps = half;
        }
    }
}

#[test]
fn sign_evaluation_matches_rational_horner() {
    let mut rng = StdRng::seed_from_u64(0x516);
    for _ in 0..2000 {
        let c = random_int_poly(&mut rng, 9, 1000);
        let q = to_poly(&c).scale(&rat(rng.gen_range(-9..=9) | 1, rng.gen_range(1..=9)));
        let x = rat(rng.gen_range(-500..=500), rng.gen_range(1..=97));
        let v = q.eval(&x);
        let expected = if v > int(0) {
            1
        } else if v < int(0) {
            -1
        } else {
            0
        };
        assert_eq!(q.sign_at(&x), expected);
        assert_eq!(
            sign_i128(
                &c,
                x.numer().try_into().unwrap(),
                x.denom().try_into().unwrap()
            ),
            to_poly(&c).sign_at(&x)
        );
    }
}
