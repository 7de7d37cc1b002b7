use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::rational::{half, Rational};
use num_traits::One;

/// A finite truth assignment. Iteration is in variable-name order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    assignment: BTreeMap<String, bool>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: impl Into<String>, value: bool) -> Self {
        self.assignment.insert(var.into(), value);
        self
    }

    pub fn set(&mut self, var: impl Into<String>, value: bool) {
        self.assignment.insert(var.into(), value);
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.assignment.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.assignment.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// The `index`-th valuation of `vars` in canonical order: `vars` sorted,
    /// false before true, first variable most significant.
    pub fn nth<'a>(vars: impl IntoIterator<Item = &'a String>, index: u64) -> Self {
        let vars: Vec<&String> = vars.into_iter().collect();
        let n = vars.len();
        let mut v = Valuation::new();
        for (i, x) in vars.into_iter().enumerate() {
            v.set(x.clone(), index >> (n - 1 - i) & 1 == 1);
        }
        v
    }

    /// Inverse of [`Valuation::nth`] for the given (sorted) variable list.
    pub fn index_in<'a>(&self, vars: impl IntoIterator<Item = &'a String>) -> Result<u64> {
        let mut idx = 0u64;
        for x in vars {
            let b = self
                .get(x)
                .ok_or_else(|| Error::UnboundVariable(x.clone()))?;
            idx = idx << 1 | u64::from(b);
        }
        Ok(idx)
    }

    /// Accepts `x=1,y=0`; values may also be written `T`/`F`, `true`/`false`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut v = Valuation::new();
        let mut offset = 0;
        for part in text.split(',') {
            let pos = offset + (part.len() - part.trim_start().len());
            offset += part.len() + 1;
            let part = part.trim();
            if part.is_empty() {
                if text.trim().is_empty() {
                    break;
                }
                return Err(Error::parse(pos, "empty assignment"));
            }
            let (name, value) = part.split_once('=').ok_or_else(|| {
                Error::parse(pos, format!("expected `name=value`, found `{}`", part))
            })?;
            let name = name.trim();
            if !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::parse(
                    pos,
                    format!("invalid variable name `{}`", name),
                ));
            }
            let value = match value.trim() {
                "1" | "T" | "t" | "true" => true,
                "0" | "F" | "f" | "false" => false,
                other => {
                    return Err(Error::parse(
                        pos,
                        format!("invalid truth value `{}`", other),
                    ))
                }
            };
            if v.assignment.insert(name.to_string(), value).is_some() {
                return Err(Error::parse(
                    pos,
                    format!("variable `{}` assigned twice", name),
                ));
            }
        }
        Ok(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.assignment {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{}={}", k, u8::from(*v))?;
        }
        Ok(())
    }
}

impl FromStr for Valuation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Valuation::parse(s)
    }
}

/// Checks `1/2 < x <= 1`.
pub fn check_rate(what: &'static str, x: &Rational) -> Result<()> {
    if *x > half() && *x <= Rational::one() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: x.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    pub valuation: Valuation,
    pub nu: Rational,
    pub mu: Rational,
}

impl Interpretation {
    pub fn new(valuation: Valuation, nu: Rational, mu: Rational) -> Result<Self> {
        check_rate("nu", &nu)?;
        check_rate("mu", &mu)?;
        Ok(Interpretation { valuation, nu, mu })
    }
}
