use std::fmt;

/// Gate kinds. Each kind except the constants has a negated-output partner
/// (`Not`/`Id`, `And`/`Nand`, ...), which is what an unreliable gate computes
/// when it misfires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Verum,
    Falsum,
    Not,
    Id,
    And,
    Nand,
    Or,
    Nor,
    Imp,
    Nimp,
    Iff,
    Xor,
    /// Strict majority over an odd number (at least 3) of inputs.
    Maj(u32),
    Nmaj(u32),
}

impl Kind {
    pub fn arity(self) -> usize {
        match self {
            Kind::Verum | Kind::Falsum => 0,
            Kind::Not | Kind::Id => 1,
            Kind::And
            | Kind::Nand
            | Kind::Or
            | Kind::Nor
            | Kind::Imp
            | Kind::Nimp
            | Kind::Iff
            | Kind::Xor => 2,
            Kind::Maj(n) | Kind::Nmaj(n) => n as usize,
        }
    }

    /// The negated-output counterpart. `None` for the constants.
    pub fn complement(self) -> Option<Kind> {
        Some(match self {
            Kind::Verum | Kind::Falsum => return None,
            Kind::Not => Kind::Id,
            Kind::Id => Kind::Not,
            Kind::And => Kind::Nand,
            Kind::Nand => Kind::And,
            Kind::Or => Kind::Nor,
            Kind::Nor => Kind::Or,
            Kind::Imp => Kind::Nimp,
            Kind::Nimp => Kind::Imp,
            Kind::Iff => Kind::Xor,
            Kind::Xor => Kind::Iff,
            Kind::Maj(n) => Kind::Nmaj(n),
            Kind::Nmaj(n) => Kind::Maj(n),
        })
    }

    pub fn is_negated_output(self) -> bool {
        matches!(
            self,
            Kind::Id | Kind::Nand | Kind::Nor | Kind::Nimp | Kind::Xor | Kind::Nmaj(_)
        )
    }

    /// Truth function; `args.len()` must equal the arity.
    pub fn apply(self, args: &[bool]) -> bool {
        debug_assert_eq!(args.len(), self.arity());
        match self {
            Kind::Verum => true,
            Kind::Falsum => false,
            Kind::Not => !args[0],
            Kind::Id => args[0],
            Kind::And => args[0] && args[1],
            Kind::Or => args[0] || args[1],
            Kind::Imp => !args[0] || args[1],
            Kind::Iff => args[0] == args[1],
            Kind::Maj(_) => 2 * args.iter().filter(|&&b| b).count() > args.len(),
            negated => !negated
                .complement()
                .expect("negated-output kinds have a base")
                .apply(args),
        }
    }

    pub fn name(self) -> String {
        match self {
            Kind::Verum => "T".into(),
            Kind::Falsum => "F".into(),
            Kind::Not => "not".into(),
            Kind::Id => "id".into(),
            Kind::And => "and".into(),
            Kind::Nand => "nand".into(),
            Kind::Or => "or".into(),
            Kind::Nor => "nor".into(),
            Kind::Imp => "imp".into(),
            Kind::Nimp => "nimp".into(),
            Kind::Iff => "iff".into(),
            Kind::Xor => "xor".into(),
            Kind::Maj(n) => format!("maj{}", n),
            Kind::Nmaj(n) => format!("nmaj{}", n),
        }
    }

    /// Recognizes operator names of the text syntax (without the `?` mark).
    pub fn from_name(name: &str) -> Option<Kind> {
        Some(match name {
            "not" => Kind::Not,
            "id" => Kind::Id,
            "and" => Kind::And,
            "nand" => Kind::Nand,
            "or" => Kind::Or,
            "nor" => Kind::Nor,
            "imp" => Kind::Imp,
            "nimp" => Kind::Nimp,
            "iff" => Kind::Iff,
            "xor" => Kind::Xor,
            _ => {
                let (neg, digits) = if let Some(d) = name.strip_prefix("nmaj") {
                    (true, d)
                } else {
                    (false, name.strip_prefix("maj")?)
                };
                if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                    return None;
                }
                let n: u32 = digits.parse().ok()?;
                if n < 3 || n.is_multiple_of(2) {
                    return None;
                }
                if neg {
                    Kind::Nmaj(n)
                } else {
                    Kind::Maj(n)
                }
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Connective {
    pub kind: Kind,
    pub unreliable: bool,
}

impl Connective {
    pub fn reliable(kind: Kind) -> Self {
        Connective {
            kind,
            unreliable: false,
        }
    }

    /// Panics for the constants, which have no unreliable form.
    pub fn unreliable(kind: Kind) -> Self {
        assert!(kind.arity() > 0, "nullary connectives cannot be unreliable");
        Connective {
            kind,
            unreliable: true,
        }
    }

    pub fn arity(&self) -> usize {
        self.kind.arity()
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            self.kind.name(),
            if self.unreliable { "?" } else { "" }
        )
    }
}
