mod common;

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use ucl_core::algorithms::{PmcMode, Reasoner};
use ucl_core::formula::{satisfies, AmbitionFormula, Formula, Interpretation, Valuation};
use ucl_core::kernel::{Polynomial, Rational};

const VARS: &[&str] = &["x", "y", "z"];

fn corpus(seed: u64, n: usize, max_gates: usize) -> Vec<Formula> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let vars = &VARS[..rng.gen_range(1..=3)];
            random_formula(&mut rng, 4, vars, &all_gate_kinds(), 0.6, max_gates, true)
        })
        .collect()
}

/// Formulas whose reliable skeleton is valid, so some rates guarantee success.
fn tautology_corpus(seed: u64, n: usize) -> Vec<Formula> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shells = [
        "(or? A (not? B))",
        "(imp? A B)",
        "(iff? A B)",
        "(or A (not B))",
        "(nand? A (not? B))",
    ];
    (0..n)
        .map(|_| {
            let vars = &VARS[..rng.gen_range(1..=2)];
            let a = random_formula(&mut rng, 2, vars, &all_gate_kinds(), 0.4, 3, false).to_string();
            let shell = shells[rng.gen_range(0..shells.len())];
            f(&shell.replace(['A', 'B'], &a))
        })
        .collect()
}

/// Success polynomials for every valuation, from the distribution oracle.
fn oracle_table(psi: &Formula) -> Vec<(BTreeMap<String, bool>, Polynomial)> {
    all_assignments(psi)
        .into_iter()
        .map(|v| {
            let poly = oracle_success(psi, &v);
            (v, poly)
        })
        .collect()
}

fn rate_grid(n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| 0.5 + 0.5 * i as f64 / n as f64)
}

fn check(i: Interpretation, psi: &Formula) -> bool {
    satisfies(&i, psi).unwrap()
}

#[test]
fn witnesses_are_sound_and_modes_agree() {
    let r = Reasoner::default();
    let mut found = 0;
    for psi in corpus(0x317, 200, 8) {
        let faithful = r.witness(&psi, PmcMode::Faithful, None).unwrap();
        let fast = r.witness(&psi, PmcMode::Fast, None).unwrap();
        assert_eq!(faithful.is_some(), fast.is_some(), "{}", psi);
        if let (Some(a), Some(b)) = (&faithful, &fast) {
            assert_eq!(a.valuation, b.valuation, "{}", psi);
        }
        for w in faithful.iter().chain(fast.iter()) {
            found += 1;
            let i = Interpretation::new(w.valuation.clone(), w.nu.clone(), w.mu.clone()).unwrap();
            assert!(check(i, &psi), "{} at {:?}", psi, w);
        }
        // grid oracle: a point with P > 1/2 means the formula is satisfiable
        let grid_hit = oracle_table(&psi)
            .iter()
            .any(|(_, p)| rate_grid(2000).any(|x| eval_f64(p, x) > 0.5 + 1e-9));
        if grid_hit {
            assert!(faithful.is_some(), "missed witness for {}", psi);
        }
        assert_eq!(r.satisfiable(&psi).unwrap(), faithful.is_some());
    }
    assert!(found > 100);
}

#[test]
fn entailment_agrees_with_grid_oracle() {
    let r = Reasoner::default();
    let mut rng = StdRng::seed_from_u64(0xE77);
    let premises = [
        "mu <= nu",
        "mu <= nu^2",
        "mu <= 3/4",
        "mu <= 1 - nu + nu^2",
        "mu <= 2*nu - 1",
        "mu <= 9/10",
    ];
    let mut refuted = 0;
    for psi in corpus(0xE78, 150, 6) {
        let gamma: Vec<AmbitionFormula> = (0..rng.gen_range(0..=2))
            .map(|_| AmbitionFormula::parse(premises[rng.gen_range(0..premises.len())]).unwrap())
            .collect();
        let e = r.entails(&psi, &gamma).unwrap();
        let table = oracle_table(&psi);
        let bounds: Vec<Polynomial> = gamma.iter().map(|g| g.bound.clone()).collect();
        let grid_refutes = rate_grid(2000).any(|x| {
            let cap = bounds.iter().map(|b| eval_f64(b, x)).fold(1.0, f64::min);
            cap > 0.5 + 1e-9 && table.iter().any(|(_, p)| eval_f64(p, x) < cap - 1e-9)
        });
        if grid_refutes {
            assert!(!e.entailed, "{} should not follow from {:?}", psi, gamma);
        }
        match &e.counterexample {
            Some(c) => {
                refuted += 1;
                assert!(!e.entailed);
                let i =
                    Interpretation::new(c.valuation.clone(), c.nu.clone(), c.mu.clone()).unwrap();
                for g in &gamma {
                    assert!(satisfies(&i, g).unwrap(), "counterexample violates {}", g);
                }
                assert!(!check(i, &psi));
            }
            None => assert!(e.entailed),
        }
    }
    assert!(refuted > 30);
}

#[test]
fn abduction_cells_are_sound() {
    let r = Reasoner::default();
    let mut rng = StdRng::seed_from_u64(0xAB);
    let mut accepted = 0;
    for psi in corpus(0xAC, 15, 6)
        .into_iter()
        .chain(tautology_corpus(0xAD, 15))
    {
        let mu = rat(rng.gen_range(51..=99), 100);
        let k = rng.gen_range(1..=8);
        let a = r.abduce(&psi, &mu, k).unwrap();
        let table = r.success_table(&psi).unwrap();
        for cell in &a.intervals {
            accepted += 1;
            for _ in 0..1000 {
                let nu = grid_sample(&mut rng, &cell.lo, &cell.hi, 1 << 20);
                for p in table.polys() {
                    assert!(
                        p.eval(&nu) >= mu,
                        "{} below {} at {} in {}",
                        p,
                        mu,
                        nu,
                        cell
                    );
                }
            }
        }
        for rej in &a.rejections {
            let nu = rej.nu.as_ref().expect("rejected cell carries a rate");
            assert!(rej.interval.contains(nu));
            let idx = rej.valuation.index_in(table.vars()).unwrap() as usize;
            assert!(table.poly(idx).eval(nu) < mu);
        }
        assert_eq!(a.intervals.len() + a.rejections.len(), k);
    }
    assert!(accepted > 10);
}

#[test]
fn abduction_is_monotone_in_target() {
    let r = Reasoner::default();
    let mut rng = StdRng::seed_from_u64(0x40);
    for psi in corpus(0x41, 20, 6)
        .into_iter()
        .chain(tautology_corpus(0x42, 20))
    {
        let k = rng.gen_range(1..=10);
        let hi = rng.gen_range(52..=100);
        let lo = rng.gen_range(51..hi);
        let strict = r.abduce(&psi, &rat(hi, 100), k).unwrap();
        let loose = r.abduce(&psi, &rat(lo, 100), k).unwrap();
        for cell in &strict.intervals {
            assert!(
                loose.intervals.contains(cell),
                "{}: {} lost when lowering the target",
                psi,
                cell
            );
        }
    }
}

#[test]
fn rate_decision_differs_from_entailment() {
    let r = Reasoner::default();
    let psi = f("(or? x (not? x))");
    let c = rat(7, 10);
    let d = r.decide_rate(&psi, &c).unwrap();
    assert!(d.exists);
    let nu = d.nu.unwrap();
    for v in [true, false] {
        let i = Interpretation::new(Valuation::new().with("x", v), nu.clone(), c.clone()).unwrap();
        assert!(check(i, &psi));
    }
    let gamma = [AmbitionFormula::parse("mu <= 7/10").unwrap()];
    let e = r.entails(&psi, &gamma).unwrap();
    assert!(!e.entailed);
}

#[test]
fn optimum_dominates_sampled_rates() {
    let r = Reasoner::default();
    let mut rng = StdRng::seed_from_u64(0x05C);
    let eps = rat(1, 1_000_000_000);
    let mut feasible = 0;
    for psi in corpus(0x05D, 20, 6)
        .into_iter()
        .chain(tautology_corpus(0x05E, 20))
    {
        let o = r.optimize(&psi, &eps).unwrap();
        let table = r.success_table(&psi).unwrap();
        let g = |nu: &Rational| {
            table
                .polys()
                .iter()
                .map(|p| p.eval(nu))
                .fold(int(1), |a, b| if b < a { b } else { a })
        };
        if !o.feasible {
            continue;
        }
        feasible += 1;
        let mu_star = o.mu_star().unwrap();
        let approx = mu_star.approximate(&eps);
        for _ in 0..1000 {
            let nu = grid_sample(&mut rng, &rat(1, 2), &int(1), 1 << 24);
            let v = g(&nu);
            assert!(
                v <= &approx + &eps,
                "g({}) = {} above optimum {}",
                nu,
                v,
                approx
            );
            assert_ne!(mu_star.cmp_rational(&v), std::cmp::Ordering::Less);
        }
        let (nu_hat, mu_hat) = o.certified_pair.clone().unwrap();
        assert!(&approx - &mu_hat <= &eps + &eps);
        for (idx, p) in table.polys().iter().enumerate() {
            assert!(mu_hat <= p.eval(&nu_hat));
            let i =
                Interpretation::new(table.valuation(idx), nu_hat.clone(), mu_hat.clone()).unwrap();
            assert!(check(i, &psi));
        }
    }
    assert!(feasible > 5);
}
