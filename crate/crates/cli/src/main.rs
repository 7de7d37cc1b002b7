mod args;
mod render;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use ucl_core::algorithms::Reasoner;
use ucl_core::formula::{
    outcomes, satisfies, success_polynomial, AmbitionFormula, Formula, Interpretation, Valuation,
};
use ucl_core::kernel::rational::{places_for, to_decimal};
use ucl_core::kernel::{parse_rational, Polynomial, Rational};
use ucl_core::Error;

use args::{Cli, Command};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

struct Report {
    verdict: bool,
    payload: Value,
    text: String,
}

fn run(cli: &Cli, eps: &Rational) -> Result<Report, Error> {
    let reasoner = Reasoner::new(cli.max_gates);
    let places = places_for(eps);
    let mut text = String::new();
    let report = match &cli.command {
        Command::Entails { formula, gamma } => {
            let psi = Formula::parse(&formula.formula)?;
            let gamma: Vec<AmbitionFormula> = gamma
                .iter()
                .map(|g| AmbitionFormula::parse(g))
                .collect::<Result<_, _>>()?;
            let e = reasoner.entails(&psi, &gamma)?;
            let cex = e
                .counterexample
                .as_ref()
                .map(|c| render::witness(&c.valuation, &c.nu, &c.mu, places));
            if e.entailed {
                text.push_str("entailed\n");
            } else {
                text.push_str("not entailed\n");
                if let Some(c) = &e.counterexample {
                    let _ = writeln!(
                        text,
                        "counterexample: {}, nu = {}, mu = {}",
                        render::valuation_text(&c.valuation),
                        c.nu,
                        c.mu
                    );
                }
            }
            Report {
                verdict: e.entailed,
                payload: json!({
                    "formula": psi.to_string(),
                    "gamma": gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "entailed": e.entailed,
                    "counterexample": cex,
                }),
                text,
            }
        }
        Command::Witness {
            formula,
            mode,
            start,
        } => {
            let psi = Formula::parse(&formula.formula)?;
            let start = start.as_deref().map(Valuation::parse).transpose()?;
            let w = reasoner.witness(&psi, (*mode).into(), start.as_ref())?;
            match &w {
                Some(w) => {
                    let _ = writeln!(
                        text,
                        "witness: {}, nu = {}, mu = {}",
                        render::valuation_text(&w.valuation),
                        w.nu,
                        w.mu
                    );
                }
                None => text.push_str("no satisfying interpretation\n"),
            }
            Report {
                verdict: w.is_some(),
                payload: json!({
                    "formula": psi.to_string(),
                    "mode": format!("{:?}", mode).to_lowercase(),
                    "found": w.is_some(),
                    "witness": w.as_ref().map(|w| render::witness(&w.valuation, &w.nu, &w.mu, places)),
                }),
                text,
            }
        }
        Command::Sat { formula } => {
            let psi = Formula::parse(&formula.formula)?;
            let sat = reasoner.satisfiable(&psi)?;
            text.push_str(if sat {
                "satisfiable\n"
            } else {
                "unsatisfiable\n"
            });
            Report {
                verdict: sat,
                payload: json!({ "formula": psi.to_string(), "satisfiable": sat }),
                text,
            }
        }
        Command::Abduce { formula, mu, k } => {
            let psi = Formula::parse(&formula.formula)?;
            let mu = parse_rational(mu)?;
            let a = reasoner.abduce(&psi, &mu, *k)?;
            if a.intervals.is_empty() {
                text.push_str("no grid cell guarantees the target\n");
            }
            for i in &a.intervals {
                let _ = writeln!(text, "{}", i);
            }
            Report {
                verdict: !a.intervals.is_empty(),
                payload: json!({
                    "formula": psi.to_string(),
                    "mu": render::rational(&mu),
                    "k": k,
                    "intervals": a.intervals.iter().map(render::interval).collect::<Vec<_>>(),
                    "rejected": a.rejections.iter().map(|r| json!({
                        "index": r.index,
                        "interval": render::interval(&r.interval),
                        "valuation": render::valuation(&r.valuation),
                        "nu": r.nu.as_ref().map(render::rational),
                    })).collect::<Vec<_>>(),
                }),
                text,
            }
        }
        Command::DecideRate { formula, mu } => {
            let psi = Formula::parse(&formula.formula)?;
            let mu = parse_rational(mu)?;
            let d = reasoner.decide_rate(&psi, &mu)?;
            match (&d.exists, &d.nu) {
                (true, Some(nu)) => {
                    let _ = writeln!(text, "rate exists: nu = {}", nu);
                }
                (true, None) => text.push_str("rate exists\n"),
                (false, _) => text.push_str("no rate achieves the target\n"),
            }
            Report {
                verdict: d.exists,
                payload: json!({
                    "formula": psi.to_string(),
                    "mu": render::rational(&mu),
                    "exists": d.exists,
                    "nu": d.nu.as_ref().map(render::rational),
                }),
                text,
            }
        }
        Command::Optimize { formula } => {
            let psi = Formula::parse(&formula.formula)?;
            let o = reasoner.optimize(&psi, eps)?;
            if o.feasible {
                let _ = writeln!(
                    text,
                    "optimum: mu* = {}",
                    render::algebraic_text(&o.sup, places)
                );
                let _ = writeln!(
                    text,
                    "at: nu* = {}",
                    render::algebraic_text(&o.argmax, places)
                );
                if let Some((nu, mu)) = &o.certified_pair {
                    let _ = writeln!(text, "certified pair: nu = {}, mu = {}", nu, mu);
                }
            } else {
                let _ = writeln!(text, "no optimum: {}", o.diagnostic);
            }
            Report {
                verdict: o.feasible,
                payload: json!({
                    "formula": psi.to_string(),
                    "feasible": o.feasible,
                    "attained": o.attained,
                    "nu_star": o.nu_star().map(|a| render::algebraic(a, places)),
                    "mu_star": o.mu_star().map(|a| render::algebraic(a, places)),
                    "sup": render::algebraic(&o.sup, places),
                    "argmax": render::algebraic(&o.argmax, places),
                    "certified_pair": o.certified_pair.as_ref().map(|(nu, mu)| json!({
                        "nu": render::rational(nu),
                        "mu": render::rational(mu),
                    })),
                    "diagnostic": o.diagnostic,
                }),
                text,
            }
        }
        Command::Eval {
            formula,
            assign,
            nu,
            mu,
        } => {
            let psi = Formula::parse(&formula.formula)?;
            let v = Valuation::parse(assign)?;
            let i = Interpretation::new(v, parse_rational(nu)?, parse_rational(mu)?)?;
            let gates = psi.unreliable_count();
            if gates > cli.max_gates {
                return Err(Error::GateLimit {
                    gates,
                    limit: cli.max_gates,
                });
            }
            let p = success_polynomial(&psi, &i.valuation)?;
            let value = p.eval(&i.nu);
            let ok = satisfies(&i, &psi)?;
            let _ = writeln!(text, "success polynomial: {}", p);
            let _ = writeln!(text, "value at nu = {}: {}", i.nu, value);
            let _ = writeln!(
                text,
                "{} (mu = {})",
                if ok { "satisfied" } else { "not satisfied" },
                i.mu
            );
            Report {
                verdict: ok,
                payload: json!({
                    "formula": psi.to_string(),
                    "valuation": render::valuation(&i.valuation),
                    "nu": render::rational(&i.nu),
                    "mu": render::rational(&i.mu),
                    "success_polynomial": p.to_string(),
                    "value": render::rational(&value),
                    "value_decimal": to_decimal(&value, places),
                    "satisfied": ok,
                }),
                text,
            }
        }
        Command::Outcomes { formula } => {
            let psi = Formula::parse(&formula.formula)?;
            let mut rows = Vec::new();
            let mut total = Polynomial::zero();
            for o in outcomes(&psi, cli.max_gates)? {
                let bits: String = o
                    .pattern
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect();
                let _ = writeln!(
                    text,
                    "{:<w$}  {}  {}",
                    bits,
                    o.formula,
                    o.probability,
                    w = o.pattern.len().max(1)
                );
                rows.push(json!({
                    "pattern": bits,
                    "formula": o.formula.to_string(),
                    "probability": o.probability.to_string(),
                }));
                total = total + o.probability;
            }
            let sums_to_one = total == Polynomial::one();
            let _ = writeln!(text, "total: {} ({} outcomes)", total, rows.len());
            Report {
                verdict: sums_to_one,
                payload: json!({
                    "formula": psi.to_string(),
                    "count": rows.len(),
                    "outcomes": rows,
                    "total": total.to_string(),
                    "sums_to_one": sums_to_one,
                }),
                text,
            }
        }
    };
    Ok(report)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::GateLimit { .. } => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    let command = cli.command.name();
    let started = Instant::now();
    let outcome = parse_rational(&cli.eps).and_then(|eps| {
        if eps <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidArgument("eps must be positive".into()));
        }
        run(&cli, &eps).map(|r| (r, eps))
    });
    let elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;

    match outcome {
        Ok((report, eps)) => {
            if cli.json {
                let out = json!({
                    "command": command,
                    "verdict": u8::from(report.verdict),
                    "payload": report.payload,
                    "eps": eps.to_string(),
                    "elapsed_ms": elapsed_ms,
                });
                println!("{}", out);
            } else {
                print!("{}", report.text);
            }
            if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_NEGATIVE)
            }
        }
        Err(e) => {
            let code = exit_code_for(&e);
            if cli.json {
                let out = json!({
                    "command": command,
                    "verdict": Value::Null,
                    "payload": { "error": e.to_string(), "exit_code": code },
                    "eps": cli.eps,
                    "elapsed_ms": elapsed_ms,
                });
                println!("{}", out);
            } else {
                eprintln!("error: {}", e);
            }
            ExitCode::from(code)
        }
    }
}
