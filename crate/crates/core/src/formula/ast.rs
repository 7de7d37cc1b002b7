use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::connective::{Connective, Kind};
use super::valuation::Valuation;
use crate::error::{Error, Result};

/// One bit per unreliable gate in pre-order; `true` means the gate misfires.
pub type MisfirePattern = Vec<bool>;

/// A circuit formula. Formulas without unreliable gates are ordinary
/// propositional formulas and double as outcomes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    App { op: Connective, args: Vec<Formula> },
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn verum() -> Self {
        Formula::App {
            op: Connective::reliable(Kind::Verum),
            args: Vec::new(),
        }
    }

    pub fn falsum() -> Self {
        Formula::App {
            op: Connective::reliable(Kind::Falsum),
            args: Vec::new(),
        }
    }

    pub fn app(op: Connective, args: Vec<Formula>) -> Result<Self> {
        if op.unreliable && op.arity() == 0 {
            return Err(Error::UnreliableNullary(op.kind.name()));
        }
        if args.len() != op.arity() {
            return Err(Error::Arity {
                op: op.to_string(),
                expected: op.arity(),
                found: args.len(),
                pos: 0,
            });
        }
        Ok(Formula::App { op, args })
    }

    /// Shorthand used heavily in tests: `Formula::gate(Kind::Or, true, [a, b])`.
    pub fn gate<const N: usize>(kind: Kind, unreliable: bool, args: [Formula; N]) -> Self {
        let op = Connective { kind, unreliable };
        Formula::app(op, args.into()).expect("well-formed gate")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).formula_only()
    }

    /// Number of unreliable occurrences, i.e. the misfire pattern width.
    pub fn unreliable_count(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::App { op, args } => {
                usize::from(op.unreliable)
                    + args.iter().map(Formula::unreliable_count).sum::<usize>()
            }
        }
    }

    pub fn is_pl(&self) -> bool {
        self.unreliable_count() == 0
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::App { args, .. } => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::App { args, .. } => 1 + args.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(x) => {
                out.insert(x.clone());
            }
            Formula::App { args, .. } => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Positions of the unreliable gates in depth-first pre-order. A position
    /// is the list of child indices leading from the root.
    pub fn fau(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.fau_into(&mut path, &mut out);
        out
    }

    fn fau_into(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if let Formula::App { op, args } = self {
            if op.unreliable {
                out.push(path.clone());
            }
            for (i, a) in args.iter().enumerate() {
                path.push(i);
                a.fau_into(path, out);
                path.pop();
            }
        }
    }

    /// The outcome selected by `pattern`: each unreliable gate becomes its
    /// reliable connective, or the negated-output counterpart if it misfires.
    pub fn apply_pattern(&self, pattern: &[bool]) -> Result<Formula> {
        let expected = self.unreliable_count();
        if pattern.len() != expected {
            return Err(Error::PatternLength {
                expected,
                found: pattern.len(),
            });
        }
        let mut bits = pattern.iter().copied();
        Ok(self.resolve(&mut bits))
    }

    fn resolve(&self, bits: &mut impl Iterator<Item = bool>) -> Formula {
        match self {
            Formula::Var(_) => self.clone(),
            Formula::App { op, args } => {
                let kind = if op.unreliable && bits.next().expect("pattern length checked") {
                    op.kind
                        .complement()
                        .expect("unreliable gates have arity >= 1")
                } else {
                    op.kind
                };
                Formula::App {
                    op: Connective::reliable(kind),
                    args: args.iter().map(|a| a.resolve(bits)).collect(),
                }
            }
        }
    }

    /// The misfire pattern producing `outcome`, if it is an outcome of `self`.
    pub fn pattern_of(&self, outcome: &Formula) -> Option<MisfirePattern> {
        let mut bits = Vec::new();
        self.match_outcome(outcome, &mut bits).then_some(bits)
    }

    fn match_outcome(&self, outcome: &Formula, bits: &mut Vec<bool>) -> bool {
        match (self, outcome) {
            (Formula::Var(a), Formula::Var(b)) => a == b,
            (
                Formula::App { op, args },
                Formula::App {
                    op: oop,
                    args: oargs,
                },
            ) => {
                if oop.unreliable || args.len() != oargs.len() {
                    return false;
                }
                if op.unreliable {
                    if oop.kind == op.kind {
                        bits.push(false);
                    } else if Some(oop.kind) == op.kind.complement() {
                        bits.push(true);
                    } else {
                        return false;
                    }
                } else if oop.kind != op.kind {
                    return false;
                }
                args.iter()
                    .zip(oargs)
                    .all(|(a, b)| a.match_outcome(b, bits))
            }
            _ => false,
        }
    }

    /// Classical truth value of a propositional formula.
    pub fn eval_pl(&self, v: &Valuation) -> Result<bool> {
        match self {
            Formula::Var(x) => v.get(x).ok_or_else(|| Error::UnboundVariable(x.clone())),
            Formula::App { op, args } => {
                if op.unreliable {
                    return Err(Error::InvalidArgument(format!(
                        "`{}` is not a propositional formula",
                        self
                    )));
                }
                let vals = args
                    .iter()
                    .map(|a| a.eval_pl(v))
                    .collect::<Result<Vec<_>>>()?;
                Ok(op.kind.apply(&vals))
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(x) => f.write_str(x),
            Formula::App { op, args } if args.is_empty() => write!(f, "{}", op),
            Formula::App { op, args } => {
                write!(f, "({}", op)?;
                for a in args {
                    write!(f, " {}", a)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::parse(s)
    }
}

#[derive(Debug)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

pub(crate) struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

fn is_atom_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '?'
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<(usize, Token<'a>)> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let c = rest.chars().next()?;
        Some(match c {
            '(' => (self.pos, Token::Open),
            ')' => (self.pos, Token::Close),
            _ => {
                let len = rest.find(|c: char| !is_atom_char(c)).unwrap_or(rest.len());
                (self.pos, Token::Atom(&rest[..len]))
            }
        })
    }

    fn bump(&mut self, tok: &Token<'_>) {
        self.pos += match tok {
            Token::Open | Token::Close => 1,
            Token::Atom(a) => a.len().max(1),
        };
    }

    fn formula_only(mut self) -> Result<Formula> {
        let f = self.formula()?;
        match self.peek() {
            None => Ok(f),
            Some((pos, _)) => Err(Error::parse(pos, "trailing input after formula")),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let Some((pos, tok)) = self.peek() else {
            return Err(Error::parse(self.pos, "unexpected end of input"));
        };
        match tok {
            Token::Close => Err(Error::parse(pos, "unexpected `)`")),
            Token::Atom("") => {
                let c = self.text[pos..].chars().next().unwrap_or(' ');
                Err(Error::parse(pos, format!("unexpected character `{}`", c)))
            }
            Token::Atom(a) => {
                self.bump(&tok);
                leaf(a, pos)
            }
            Token::Open => {
                self.bump(&tok);
                let (op_pos, op_tok) = self
                    .peek()
                    .ok_or_else(|| Error::parse(self.text.len(), "expected an operator"))?;
                let Token::Atom(name) = op_tok else {
                    return Err(Error::parse(op_pos, "expected an operator"));
                };
                self.bump(&op_tok);
                let op = operator(name, op_pos)?;
                let mut args = Vec::new();
                loop {
                    match self.peek() {
                        Some((_, Token::Close)) => {
                            self.pos += 1;
                            break;
                        }
                        None => return Err(Error::parse(self.text.len(), "missing `)`")),
                        _ => args.push(self.formula()?),
                    }
                }
                if args.len() != op.arity() {
                    return Err(Error::Arity {
                        op: op.to_string(),
                        expected: op.arity(),
                        found: args.len(),
                        pos: op_pos,
                    });
                }
                Ok(Formula::App { op, args })
            }
        }
    }
}

fn is_var_name(a: &str) -> bool {
    let mut cs = a.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn leaf(a: &str, pos: usize) -> Result<Formula> {
    match a {
        "T" => Ok(Formula::verum()),
        "F" => Ok(Formula::falsum()),
        "T?" | "F?" => Err(Error::UnreliableNullary(a[..1].to_string())),
        _ if is_var_name(a) => Ok(Formula::Var(a.to_string())),
        _ => Err(Error::parse(pos, format!("invalid variable name `{}`", a))),
    }
}

fn operator(name: &str, pos: usize) -> Result<Connective> {
    let (base, unreliable) = match name.strip_suffix('?') {
        Some(b) => (b, true),
        None => (name, false),
    };
    if base == "T" || base == "F" {
        return Err(if unreliable {
            Error::UnreliableNullary(base.to_string())
        } else {
            Error::parse(
                pos,
                format!("constant `{}` cannot head an application", base),
            )
        });
    }
    let kind = Kind::from_name(base)
        .ok_or_else(|| Error::parse(pos, format!("unknown operator `{}`", name)))?;
    Ok(Connective { kind, unreliable })
}
