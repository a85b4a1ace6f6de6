//! Exact natural and rational arithmetic.
//!
//! Everything that decides a verdict (membership, emptiness of a window,
//! an error bound) goes through these types. Decimal rendering exists for
//! people reading reports and is never compared against.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::Error;

/// Unbounded natural number.
pub type Natural = BigUint;

/// Unbounded rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn nat(n: u64) -> Natural {
    Natural::from(n)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` for small operands; panics on a zero denominator.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_natural(n: &Natural) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

/// `base^exp` for any signed exponent.
///
/// Panics when `base` is zero and `exp` is negative.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    let magnitude = exp.unsigned_abs();
    let numer: BigInt = Pow::pow(base.numer(), magnitude);
    let denom: BigInt = Pow::pow(base.denom(), magnitude);
    if exp >= 0 {
        Rational::new(numer, denom)
    } else {
        Rational::new(denom, numer)
    }
}

/// Greatest integer not exceeding a non-negative rational.
pub fn floor_rat(x: &Rational) -> Result<Natural, Error> {
    if x.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "floor of negative value {}",
            fmt_rational(x)
        )));
    }
    Ok(x.numer().div_floor(x.denom()).magnitude().clone())
}

/// Least integer not below a non-negative rational.
pub fn ceil_rat(x: &Rational) -> Result<Natural, Error> {
    if x.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "ceiling of negative value {}",
            fmt_rational(x)
        )));
    }
    Ok(x.numer().div_ceil(x.denom()).magnitude().clone())
}

/// Canonical `p/q` string; integers still carry `/1`.
pub fn fmt_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p`, `p/q` or a decimal literal such as `0.49` into an exact rational.
///
/// A leading `-` is accepted; callers that need a positive value check it.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {text:?}"));
    let s = text.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let value = if let Some((p, q)) = body.split_once('/') {
        if !digits(p) || !digits(q) {
            return Err(bad());
        }
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in {text:?}")));
        }
        Rational::new(p.parse().map_err(|_| bad())?, q)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if !digits(whole) || !digits(frac) {
            return Err(bad());
        }
        let scale = Pow::pow(BigInt::from(10u32), frac.len());
        let joined: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
        Rational::new(joined, scale)
    } else {
        if !digits(body) {
            return Err(bad());
        }
        Rational::from_integer(body.parse().map_err(|_| bad())?)
    };
    Ok(if negative { -value } else { value })
}

/// Decimal rendering with `sig` significant digits, rounded half up.
///
/// Display only. Uses plain notation for moderate magnitudes and
/// scientific notation outside `[1e-6, 1e15)`.
pub fn to_decimal(x: &Rational, sig: usize) -> String {
    let sig = sig.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let x = x.abs();
    let ten = Rational::from_integer(BigInt::from(10u32));
    // exponent e with 10^e <= x < 10^(e+1)
    let mut e: i64 = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    while rat_pow(&ten, e) > x {
        e -= 1;
    }
    while rat_pow(&ten, e + 1) <= x {
        e += 1;
    }
    let shift = sig as i64 - 1 - e;
    let scaled = &x * rat_pow(&ten, shift);
    let half = ratio(1, 2);
    let mut digits = (scaled + half).floor().to_integer();
    if digits.to_string().len() > sig {
        digits /= 10;
        e += 1;
    }
    let digits = digits.to_string();
    if !(-6..15).contains(&e) {
        let (head, tail) = digits.split_at(1);
        let tail = tail.trim_end_matches('0');
        return if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        };
    }
    let out = if e >= 0 {
        let int_len = e as usize + 1;
        if digits.len() <= int_len {
            format!("{digits}{}", "0".repeat(int_len - digits.len()))
        } else {
            let (i, f) = digits.split_at(int_len);
            format!("{i}.{f}")
        }
    } else {
        format!("0.{}{digits}", "0".repeat((-e - 1) as usize))
    };
    let out = if out.contains('.') {
        out.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        out
    };
    format!("{sign}{out}")
}

/// Exact comparison of `p1/q1` and `p2/q2` for positive machine-sized parts.
#[inline]
pub fn cmp_fractions(p1: u64, q1: u64, p2: u64, q2: u64) -> Ordering {
    (p1 as u128 * q2 as u128).cmp(&(p2 as u128 * q1 as u128))
}

pub fn fraction(p: u64, q: u64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u64) -> Natural {
    (1..=n).fold(Natural::one(), |acc, k| acc * k)
}

pub fn to_u64(n: &Natural) -> Option<u64> {
    n.to_u64()
}

/// Nonnegative rational as a `(numerator, denominator)` pair of naturals.
pub(crate) fn parts(x: &Rational) -> (Natural, Natural) {
    debug_assert!(!x.is_negative());
    (x.numer().magnitude().clone(), x.denom().magnitude().clone())
}
