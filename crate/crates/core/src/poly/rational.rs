use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3/2"` or a finite decimal such as `"1.25"` / `"-2.5e-3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let fail = || Error::ParseRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(fail());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| fail())?;
        let d: BigInt = d.trim().parse().map_err(|_| fail())?;
        if d.is_zero() {
            return Err(fail());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| fail())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(fail());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(fail());
    }
    let mut all = alloc::string::String::from(int_part);
    all.push_str(frac_part);
    let numer: BigInt = all.parse().map_err(|_| fail())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(numer);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    if negative {
        value = -value;
    }
    Ok(value)
}

pub(crate) fn is_one(r: &Rational) -> bool {
    r.is_one()
}
