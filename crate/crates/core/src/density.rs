//! Lower and upper asymptotic density.
//!
//! Two kinds of answers are kept apart: closed forms, which are exact limits
//! for families whose counting function is known, and estimates, which
//! evaluate `|A(x)|/x` at structured points and report the extremes together
//! with the points that produced them.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::numeric::{factorial, fmt_rational, from_natural, nat, parts, to_decimal, Natural, Rational};
use crate::setspec::{block_part, FactorialBlocks, Part, SetSpec};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfilePoint {
    pub x: Natural,
    pub count: Natural,
    /// `count / x`, exact.
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityEstimate {
    pub liminf_bound: Rational,
    pub limsup_bound: Rational,
    /// Points where the counting ratio dips (just before a block starts).
    pub liminf_points: Vec<ProfilePoint>,
    /// Points where the counting ratio peaks (at the end of a block).
    pub limsup_points: Vec<ProfilePoint>,
}

fn point(spec: &SetSpec, x: Natural) -> Result<ProfilePoint, Error> {
    let count = spec.count_upto(&x)?;
    let ratio = Rational::new(BigInt::from(count.clone()), BigInt::from(x.clone()));
    Ok(ProfilePoint { x, count, ratio })
}

/// Exact `|A(x)|/x` at each requested point.
pub fn density_profile(spec: &SetSpec, points: &[Natural]) -> Result<Vec<ProfilePoint>, Error> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("density profile needs at least one point".into()));
    }
    points
        .iter()
        .map(|x| {
            if x.is_zero() {
                Err(Error::InvalidArgument("profile points must be >= 1".into()))
            } else {
                point(spec, x.clone())
            }
        })
        .collect()
}

/// Evaluates the counting ratio along the tail `k ∈ [⌈depth/2⌉, depth]` of
/// the spec's natural scale and returns the extremes.
///
/// Interval families are sampled at `⌈c·b^k⌉ - 1` (the ratio is lowest just
/// before a block opens) and `⌈e·b^k⌉ - 1` (highest as a block closes).
/// Factorial blocks use block ends; everything else a grid of powers of two.
pub fn estimate_lower_density(spec: &SetSpec, depth: u32) -> Result<DensityEstimate, Error> {
    if depth < 2 {
        return Err(Error::InvalidArgument(format!("depth {depth} too small; need >= 2")));
    }
    let first = depth.div_ceil(2);
    let (low_x, high_x) = sample_points(spec, first, depth);
    let keep = |xs: Vec<Natural>| -> Vec<Natural> {
        let mut xs: Vec<Natural> = xs.into_iter().filter(|x| !x.is_zero()).collect();
        xs.sort();
        xs.dedup();
        xs
    };
    let low_x = keep(low_x);
    let high_x = keep(high_x);
    if low_x.is_empty() && high_x.is_empty() {
        return Err(Error::InvalidArgument(format!("depth {depth} reaches no evaluation point")));
    }
    let liminf_points = low_x.into_iter().map(|x| point(spec, x)).collect::<Result<Vec<_>, _>>()?;
    let limsup_points = high_x.into_iter().map(|x| point(spec, x)).collect::<Result<Vec<_>, _>>()?;
    let all = || liminf_points.iter().chain(&limsup_points).map(|p| &p.ratio);
    let liminf_bound = all().min().expect("nonempty").clone();
    let limsup_bound = all().max().expect("nonempty").clone();
    Ok(DensityEstimate { liminf_bound, limsup_bound, liminf_points, limsup_points })
}

fn sample_points(spec: &SetSpec, first: u32, depth: u32) -> (Vec<Natural>, Vec<Natural>) {
    let tail = first..=depth;
    match spec {
        SetSpec::IntervalUnion { a, b } => {
            let (an, ad) = parts(a);
            let (bn, bd) = parts(b);
            let mut low = Vec::new();
            let mut high = Vec::new();
            for k in tail {
                let bnk: Natural = Pow::pow(&bn, k);
                let bdk: Natural = Pow::pow(&bd, k);
                low.push(ceil_div(&bnk, &bdk) - 1u32);
                high.push(ceil_div(&(&an * &bnk), &(&ad * &bdk)) - 1u32);
            }
            (low, high)
        }
        SetSpec::LeadingDigit { base, digits } => {
            let mut low = Vec::new();
            let mut high = Vec::new();
            for k in tail {
                let p: Natural = Pow::pow(nat(*base), k);
                for &d in digits {
                    if digits.binary_search(&(d - 1)).is_err() {
                        low.push(&p * d - 1u32);
                    }
                    if digits.binary_search(&(d + 1)).is_err() {
                        high.push(&p * (d + 1) - 1u32);
                    }
                }
            }
            (low, high)
        }
        SetSpec::FactorialBlocks(part) => {
            let mut low = Vec::new();
            let mut high = Vec::new();
            for (k, start, len) in FactorialBlocks::new().take(depth as usize) {
                if (k as u32) < first {
                    continue;
                }
                let end = start + len - 1u32;
                if block_part(k) == *part {
                    high.push(end);
                } else {
                    low.push(end);
                }
            }
            (low, high)
        }
        _ => {
            let grid: Vec<Natural> = tail.map(|k| Pow::pow(nat(2), k)).collect();
            (grid.clone(), grid)
        }
    }
}

fn ceil_div(n: &Natural, d: &Natural) -> Natural {
    num_integer::Integer::div_ceil(n, d)
}

/// Exact lower density for sets with a known counting function.
///
/// For `⋃_k [c·b^k, e·b^k)` this is `(e - c) / (c·(b - 1))`, which for an
/// interval union (`c = 1`, `e = a`) is `(a - 1)/(b - 1)`.
pub fn closed_form_lower_density(spec: &SetSpec) -> Result<Rational, Error> {
    closed_forms(spec).map(|(lower, _)| lower)
}

/// Exact upper density; `(e - c)·b / (e·(b - 1))` for interval families.
pub fn closed_form_upper_density(spec: &SetSpec) -> Result<Rational, Error> {
    closed_forms(spec).map(|(_, upper)| upper)
}

fn closed_forms(spec: &SetSpec) -> Result<(Rational, Rational), Error> {
    if let Some(f) = spec.interval_family() {
        let one = Rational::one();
        let width = &f.upper - &f.lower;
        let lower = &width / (&f.lower * (&f.base - &one));
        let upper = &width * &f.base / (&f.upper * (&f.base - &one));
        return Ok((lower, upper));
    }
    match spec {
        SetSpec::GeometricPowers { .. } | SetSpec::Explicit(_) => Ok((Rational::zero(), Rational::zero())),
        SetSpec::FactorialBlocks(_) => Ok((Rational::zero(), Rational::one())),
        SetSpec::Periodic { period, residues } => {
            let d = Rational::new(BigInt::from(residues.len()), BigInt::from(*period));
            Ok((d.clone(), d))
        }
        other => Err(Error::Unsupported(format!("no closed-form density for {other}"))),
    }
}

fn sum_factorials(m: u64) -> Natural {
    (1..=m).map(factorial).sum()
}

/// Difference quotients of the factorial-block counting function.
///
/// With `x_n = Σ_{k≤2n-1} k!` and `y_n = Σ_{k≤2n} k!`, returns
/// `(ΔA(y)/Δy, ΔA(x)/Δx)` at step `n` and checks them against
/// `1/(2n+3)` and `(2n+1)!/((2n+1)! + (2n)!) = 1/(1 + 1/(2n+1))`.
pub fn stolz_cesaro_check(n: u64) -> Result<(Rational, Rational), Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("stolz-cesaro step must be >= 1".into()));
    }
    let part_a = SetSpec::FactorialBlocks(Part::A);
    let count = |x: &Natural| part_a.count_upto(x);
    let y = |m: u64| sum_factorials(2 * m);
    let x = |m: u64| sum_factorials(2 * m - 1);
    let quotient = |lo: Natural, hi: Natural| -> Result<Rational, Error> {
        let dc = count(&hi)? - count(&lo)?;
        Ok(Rational::new(BigInt::from(dc), BigInt::from(hi - lo)))
    };
    let via_y = quotient(y(n), y(n + 1))?;
    let via_x = quotient(x(n), x(n + 1))?;

    let r = |v: &Natural| from_natural(v);
    let expect_y = Rational::new(BigInt::one(), BigInt::from(2 * n + 3));
    let f_odd = factorial(2 * n + 1);
    let f_even = factorial(2 * n);
    let expect_x = r(&f_odd) / (r(&f_odd) + r(&f_even));
    let expect_x_alt = Rational::one()
        / (Rational::one() + Rational::new(BigInt::one(), BigInt::from(2 * n + 1)));
    if via_y != expect_y {
        return Err(Error::ClosedFormMismatch(format!(
            "n={n}: y-quotient {} != {}",
            fmt_rational(&via_y),
            fmt_rational(&expect_y)
        )));
    }
    if via_x != expect_x || expect_x != expect_x_alt {
        return Err(Error::ClosedFormMismatch(format!(
            "n={n}: x-quotient {} != {}",
            fmt_rational(&via_x),
            fmt_rational(&expect_x)
        )));
    }
    Ok((via_y, via_x))
}

/// Profile as CSV: `x,count,ratio_numerator,ratio_denominator,ratio_decimal`.
pub fn profile_csv(points: &[ProfilePoint]) -> String {
    let mut out = String::from("x,count,ratio_numerator,ratio_denominator,ratio_decimal\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.x,
            p.count,
            p.ratio.numer(),
            p.ratio.denom(),
            to_decimal(&p.ratio, 15)
        ));
    }
    out
}
