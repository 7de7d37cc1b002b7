//! JSON encodings of kernel values.

use serde_json::{json, Map, Value};

use ucl_core::formula::Valuation;
use ucl_core::kernel::rational::to_decimal;
use ucl_core::kernel::{AlgebraicNumber, Interval, Rational};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn interval(i: &Interval) -> Value {
    json!({
        "lo": i.lo.to_string(),
        "hi": i.hi.to_string(),
        "lo_open": i.lo_open,
        "hi_open": i.hi_open,
    })
}

pub fn valuation(v: &Valuation) -> Value {
    let mut m = Map::new();
    for (k, b) in v.iter() {
        m.insert(k.to_string(), Value::Bool(b));
    }
    Value::Object(m)
}

pub fn witness(v: &Valuation, nu: &Rational, mu: &Rational, places: usize) -> Value {
    json!({
        "valuation": valuation(v),
        "nu": rational(nu),
        "mu": rational(mu),
        "decimal": { "nu": to_decimal(nu, places), "mu": to_decimal(mu, places) },
    })
}

/// Exact value (rational) or defining polynomial with isolating interval,
/// plus a decimal annotation.
pub fn algebraic(a: &AlgebraicNumber, places: usize) -> Value {
    let approx = a.to_decimal(places);
    match a.as_rational() {
        Some(r) => json!({ "exact": r.to_string(), "decimal": approx }),
        None => json!({
            "polynomial": a.defining().to_string(),
            "interval": interval(a.isolating()),
            "decimal": approx,
        }),
    }
}

pub fn algebraic_text(a: &AlgebraicNumber, places: usize) -> String {
    match a.as_rational() {
        Some(r) => r.to_string(),
        None => format!(
            "{} (root of {} in {})",
            a.to_decimal(places),
            a.defining(),
            a.isolating()
        ),
    }
}

pub fn valuation_text(v: &Valuation) -> String {
    if v.is_empty() {
        "(no variables)".into()
    } else {
        v.to_string()
    }
}
