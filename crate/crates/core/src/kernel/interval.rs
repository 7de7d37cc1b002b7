use std::fmt;

use super::rational::{half, mid, Rational};
use crate::error::{Error, Result};
use num_traits::One;

/// Rational-endpoint interval with independent openness at each end.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, lo_open: bool, hi_open: bool) -> Result<Self> {
        let ok = lo < hi || (lo == hi && !lo_open && !hi_open);
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "empty interval {}{}, {}{}",
                if lo_open { "(" } else { "[" },
                lo,
                hi,
                if hi_open { ")" } else { "]" }
            )));
        }
        Ok(Interval {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, false, false).expect("closed interval needs lo <= hi")
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, true, true).expect("open interval needs lo < hi")
    }

    /// `(lo, hi]`
    pub fn left_open(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, true, false).expect("half-open interval needs lo < hi")
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
            lo_open: false,
            hi_open: false,
        }
    }

    /// The probability range `(1/2, 1]` both rates live in.
    pub fn unit_rate() -> Self {
        Self::left_open(half(), Rational::one())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_open {
            x > &self.lo
        } else {
            x >= &self.lo
        };
        let below = if self.hi_open {
            x < &self.hi
        } else {
            x <= &self.hi
        };
        above && below
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        mid(&self.lo, &self.hi)
    }

    pub fn closure(&self) -> Self {
        Interval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn interior(&self) -> Option<Self> {
        if self.is_point() {
            None
        } else {
            Some(Self::open(self.lo.clone(), self.hi.clone()))
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { "(" } else { "[" },
            self.lo,
            self.hi,
            if self.hi_open { ")" } else { "]" }
        )
    }
}
