//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly. Serialized form is `p/q`, or plain
//! `p` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p`, `p/q`, or a terminating decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, digits)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        if !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal `{s}`")));
        }
        let mut num: BigInt = if whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| Error::Parse(format!("bad decimal `{s}`")))?
        };
        let mut den = BigInt::from(1);
        for d in digits.chars() {
            num = num * 10 + BigInt::from(d.to_digit(10).unwrap_or(0));
            den *= 10;
        }
        let r = Rational::new(num, den);
        return Ok(if negative { -r } else { r });
    }
    let p: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    Ok(Rational::from_integer(p))
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        // Huge operands: scale down by the bit-length difference first.
        _ => {
            let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
            let scaled = if shift > 0 {
                r / Rational::from_integer(BigInt::from(1) << shift as usize)
            } else {
                r * Rational::from_integer(BigInt::from(1) << (-shift) as usize)
            };
            let n = scaled.numer().to_f64().unwrap_or(f64::NAN);
            let d = scaled.denom().to_f64().unwrap_or(f64::NAN);
            (n / d) * 2f64.powi(shift as i32)
        }
    }
}

pub fn is_integral(r: &Rational) -> bool {
    r.is_integer()
}

pub fn abs_f64(r: &Rational) -> f64 {
    to_f64(&r.abs())
}
