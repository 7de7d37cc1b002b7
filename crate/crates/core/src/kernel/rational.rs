//! Exact rationals and the few helpers the rest of the crate needs on top of
//! [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.875`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidNumber(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if (digits.is_empty() && frac.is_empty())
            || !digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mantissa: BigInt = format!("{}{}", digits, frac).parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(mantissa, scale);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Decimal rendering rounded half away from zero to `places` fractional digits.
pub fn to_decimal(r: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = if scaled.is_negative() {
        -((-scaled) + half()).floor()
    } else {
        (scaled + half()).floor()
    };
    let n = rounded.to_integer();
    let negative = n.is_negative();
    let (whole, frac) = n.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{}{}", sign, whole)
    } else {
        format!("{}{}.{:0>width$}", sign, whole, frac, width = places)
    }
}

/// Number of decimal places needed so that one unit in the last place is at most `eps`.
pub fn places_for(eps: &Rational) -> usize {
    let mut places = 0;
    let mut unit = Rational::one();
    while &unit > eps && places < 60 {
        unit /= int(10);
        places += 1;
    }
    places
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Midpoint of two rationals.
pub fn mid(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Smallest-denominator rational in the closed interval `[lo, hi]`.
///
/// Used where both bounds are already rational; the algebraic variant lives in
/// `algebraic::simplest_between`.
pub fn simplest_in_closed(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_integer() {
        return lo.clone();
    }
    let fl = lo.floor();
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // lo and hi share an integer part; recurse on the reciprocals of the fractional parts.
    let a = lo - &fl;
    let b = hi - &fl;
    if b.is_zero() {
        return fl;
    }
    let inner = simplest_in_closed(&b.recip(), &a.recip());
    fl + inner.recip()
}
