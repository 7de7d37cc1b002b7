//! Generators and independent oracles shared by the integration tests.
//!
//! The oracles deliberately avoid the library's own truth functions and
//! outcome machinery: truth tables are spelled out here, and success
//! probabilities come from a bottom-up distribution over gate outputs rather
//! than from enumerating misfire patterns.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ucl_core::formula::{Connective, Formula, Kind};
use ucl_core::kernel::{Polynomial, Rational};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

pub fn p(s: &str) -> Polynomial {
    Polynomial::parse(s).unwrap()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap()
}

pub const REL_KINDS: [Kind; 10] = [
    Kind::Not,
    Kind::Id,
    Kind::And,
    Kind::Nand,
    Kind::Or,
    Kind::Nor,
    Kind::Imp,
    Kind::Nimp,
    Kind::Iff,
    Kind::Xor,
];

pub fn all_gate_kinds() -> Vec<Kind> {
    let mut v = REL_KINDS.to_vec();
    v.extend([Kind::Maj(3), Kind::Nmaj(3), Kind::Maj(5), Kind::Nmaj(5)]);
    v
}

/// Truth table written out independently of `Kind::apply`.
pub fn truth(kind: Kind, a: &[bool]) -> bool {
    let name = kind.name();
    match name.as_str() {
        "T" => true,
        "F" => false,
        "not" => !a[0],
        "id" => a[0],
        "and" => a[0] && a[1],
        "nand" => !(a[0] && a[1]),
        "or" => a[0] || a[1],
        "nor" => !(a[0] || a[1]),
        "imp" => !a[0] || a[1],
        "nimp" => a[0] && !a[1],
        "iff" => a[0] == a[1],
        "xor" => a[0] != a[1],
        s if s.starts_with("nmaj") => a.iter().filter(|&&b| b).count() <= a.len() / 2,
        s if s.starts_with("maj") => a.iter().filter(|&&b| b).count() > a.len() / 2,
        other => panic!("unknown connective {}", other),
    }
}

pub fn eval_tt(phi: &Formula, v: &BTreeMap<String, bool>) -> bool {
    match phi {
        Formula::Var(x) => v[x],
        Formula::App { op, args } => {
            assert!(!op.unreliable);
            let a: Vec<bool> = args.iter().map(|c| eval_tt(c, v)).collect();
            truth(op.kind, &a)
        }
    }
}

pub fn all_assignments(phi: &Formula) -> Vec<BTreeMap<String, bool>> {
    let vars: Vec<String> = phi.variables().into_iter().collect();
    (0..1u32 << vars.len())
        .map(|bits| {
            vars.iter()
                .enumerate()
                .map(|(i, x)| (x.clone(), bits >> i & 1 == 1))
                .collect()
        })
        .collect()
}

pub fn tt_valid(phi: &Formula) -> bool {
    all_assignments(phi).iter().all(|v| eval_tt(phi, v))
}

pub fn tt_satisfiable(phi: &Formula) -> bool {
    all_assignments(phi).iter().any(|v| eval_tt(phi, v))
}

/// Probability, as a polynomial in `nu`, that the circuit outputs true under
/// `v`. Each gate's output distribution is built from its children's, which
/// are independent because the formula is a tree.
pub fn oracle_success(psi: &Formula, v: &BTreeMap<String, bool>) -> Polynomial {
    dist(psi, v).1
}

/// (P[false], P[true])
fn dist(psi: &Formula, v: &BTreeMap<String, bool>) -> (Polynomial, Polynomial) {
    match psi {
        Formula::Var(x) => {
            if v[x] {
                (Polynomial::zero(), Polynomial::one())
            } else {
                (Polynomial::one(), Polynomial::zero())
            }
        }
        Formula::App { op, args } => {
            let kids: Vec<(Polynomial, Polynomial)> = args.iter().map(|c| dist(c, v)).collect();
            let n = kids.len();
            let mut t = Polynomial::zero();
            let mut fl = Polynomial::zero();
            for bits in 0..1u32 << n {
                let inputs: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
                let mut pr = Polynomial::one();
                for (i, &b) in inputs.iter().enumerate() {
                    pr = &pr * if b { &kids[i].1 } else { &kids[i].0 };
                }
                if truth(op.kind, &inputs) {
                    t = t + pr;
                } else {
                    fl = fl + pr;
                }
            }
            if op.unreliable {
                let nu = Polynomial::var();
                let miss = Polynomial::one() - nu.clone();
                let t2 = &(&nu * &t) + &(&miss * &fl);
                let f2 = &(&nu * &fl) + &(&miss * &t);
                (f2, t2)
            } else {
                (fl, t)
            }
        }
    }
}

pub fn eval_f64(poly: &Polynomial, x: f64) -> f64 {
    poly.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + to_f64(c))
}

/// Random formula of the given nesting depth. Unreliable gates are added
/// until `max_gates` is reached.
pub fn random_formula(
    rng: &mut StdRng,
    depth: usize,
    vars: &[&str],
    kinds: &[Kind],
    unreliable_prob: f64,
    max_gates: usize,
    constants: bool,
) -> Formula {
    let mut budget = max_gates;
    gen(
        rng,
        depth,
        vars,
        kinds,
        unreliable_prob,
        &mut budget,
        constants,
    )
}

fn gen(
    rng: &mut StdRng,
    depth: usize,
    vars: &[&str],
    kinds: &[Kind],
    up: f64,
    budget: &mut usize,
    constants: bool,
) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        if constants && rng.gen_bool(0.1) {
            return if rng.gen_bool(0.5) {
                Formula::verum()
            } else {
                Formula::falsum()
            };
        }
        return Formula::var(vars[rng.gen_range(0..vars.len())]);
    }
    let kind = kinds[rng.gen_range(0..kinds.len())];
    let unreliable = *budget > 0 && rng.gen_bool(up);
    if unreliable {
        *budget -= 1;
    }
    let args = (0..kind.arity())
        .map(|_| gen(rng, depth - 1, vars, kinds, up, budget, constants))
        .collect();
    Formula::app(Connective { kind, unreliable }, args).unwrap()
}

/// Random formula with exactly `gates` unreliable gates (tree of random shape).
pub fn random_with_gates(rng: &mut StdRng, gates: usize, vars: &[&str]) -> Formula {
    loop {
        let psi = random_formula(rng, 6, vars, &all_gate_kinds(), 0.8, gates, true);
        if psi.unreliable_count() == gates {
            return psi;
        }
    }
}

/// Seeded random formulas; proptest's recursive combinator skews toward tiny
/// trees, which would leave most gate counts untested.
pub fn arb_formula(depth: usize, vars: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    (any::<u64>(), 0usize..=14).prop_map(move |(seed, gates)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_formula(&mut rng, depth, vars, &all_gate_kinds(), 0.7, gates, true)
    })
}

pub fn arb_valuation(
    vars: &'static [&'static str],
) -> impl Strategy<Value = BTreeMap<String, bool>> {
    prop::collection::vec(any::<bool>(), vars.len())
        .prop_map(move |bs| vars.iter().map(|x| x.to_string()).zip(bs).collect())
}

pub fn to_valuation(v: &BTreeMap<String, bool>) -> ucl_core::formula::Valuation {
    let mut out = ucl_core::formula::Valuation::new();
    for (k, b) in v {
        out.set(k.clone(), *b);
    }
    out
}

/// Rational uniformly drawn from the grid `lo + (hi - lo) * i / n`,
/// `i` in `1..=n` (so the left end is excluded).
pub fn grid_sample(rng: &mut StdRng, lo: &Rational, hi: &Rational, n: i64) -> Rational {
    let i = rng.gen_range(1..=n);
    lo + (hi - lo) * rat(i, n)
}
