//! Explicit quotient approximations, density classification, and the
//! one-parameter family of sets with prescribed lower density.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numeric::{ceil_rat, floor_rat, fmt_rational, from_natural, rat_pow, ratio, Natural, Rational};
use crate::quotient::{certified_gap, GapCertificate};
use crate::setspec::{short_rational, Part, SetSpec};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApproxMethod {
    /// `ξ ∈ [b^j, a·b^j]`: numerator `b^{j+k} + offset`, denominator `b^k`.
    /// Otherwise (`mirrored`): numerator `b^{j+1+k}`, denominator `b^k + offset`.
    IntervalUnion { j: i64, k: u64, offset: Natural, mirrored: bool },
    /// `num_base^num_exp / den_base^den_exp`.
    PowerPair { num_base: u64, num_exp: u64, den_base: u64, den_exp: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub target: Rational,
    pub epsilon: Rational,
    pub value: Rational,
    /// `|target - value|`.
    pub error: Rational,
    pub numerator: Natural,
    pub denominator: Natural,
    pub method: ApproxMethod,
}

impl ApproxResult {
    /// Re-checks membership of both witnesses and the error bound from scratch.
    pub fn verify(&self, spec: &SetSpec) -> Result<bool, Error> {
        if self.denominator.is_zero() {
            return Ok(false);
        }
        let value = from_natural(&self.numerator) / from_natural(&self.denominator);
        let error = (&self.target - &value).abs();
        Ok(value == self.value
            && error == self.error
            && error < self.epsilon
            && spec.contains(&self.numerator)?
            && spec.contains(&self.denominator)?)
    }
}

fn check_target(xi: &Rational, eps: &Rational) -> Result<(), Error> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument(format!("target must be positive, got {}", fmt_rational(xi))));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {}", fmt_rational(eps))));
    }
    Ok(())
}

fn to_nat(x: &Rational) -> Natural {
    x.to_integer().magnitude().clone()
}

/// A quotient of `interval-union(a, b)` within `eps` of `xi`, from below.
///
/// Needs an integer `b ≤ a²`. When `xi` lies in a block `[b^j, a·b^j]` the
/// numerator comes from block `j+k` and the denominator is `b^k`; when it
/// lies in a hole the roles swap, with numerator `b^{j+1+k}` and a
/// denominator from block `k`.
pub fn approximate_interval_union(spec: &SetSpec, xi: &Rational, eps: &Rational) -> Result<ApproxResult, Error> {
    let SetSpec::IntervalUnion { a, b } = spec else {
        return Err(Error::Unsupported(format!("{spec} is not an interval union")));
    };
    check_target(xi, eps)?;
    if !b.is_integer() {
        return Err(Error::Unsupported(format!("construction needs an integer b, got {}", short_rational(b))));
    }
    if b > &(a * a) {
        return Err(Error::NotFractionallyDense(format!(
            "{spec}: b > a^2, so quotients miss [{}, {}]",
            short_rational(a),
            short_rational(&(b / a))
        )));
    }
    let one = Rational::one();
    let mut j: i64 = 0;
    while rat_pow(b, j) > *xi {
        j -= 1;
    }
    while rat_pow(b, j + 1) <= *xi {
        j += 1;
    }
    let bj = rat_pow(b, j);
    let (numerator, denominator, method) = if *xi <= a * &bj {
        let mut k: i64 = (-j).max(0);
        while !(rat_pow(b, k) * eps > one && (a - &one) * rat_pow(b, j + k) >= one) {
            k += 1;
        }
        let bk = rat_pow(b, k);
        let start = to_nat(&rat_pow(b, j + k));
        let top = ceil_rat(&(a * rat_pow(b, j + k)))? - 1u32;
        let n = floor_rat(&(&bk * xi))?.min(top);
        let offset = &n - &start;
        (n, to_nat(&bk), ApproxMethod::IntervalUnion { j, k: k as u64, offset, mirrored: false })
    } else {
        let r = rat_pow(b, j + 1) / xi;
        let mut k: i64 = (-(j + 1)).max(0);
        while !(rat_pow(b, k) > xi / eps && rat_pow(b, k) * (a - &r) >= one) {
            k += 1;
        }
        let bk = rat_pow(b, k);
        let p = to_nat(&rat_pow(b, j + 1 + k));
        let q = ceil_rat(&(&bk * &r))?;
        let offset = &q - to_nat(&bk);
        (p, q, ApproxMethod::IntervalUnion { j, k: k as u64, offset, mirrored: true })
    };
    finish(spec, xi, eps, numerator, denominator, method)
}

fn finish(
    spec: &SetSpec,
    xi: &Rational,
    eps: &Rational,
    numerator: Natural,
    denominator: Natural,
    method: ApproxMethod,
) -> Result<ApproxResult, Error> {
    let value = from_natural(&numerator) / from_natural(&denominator);
    let error = (xi - &value).abs();
    let result = ApproxResult {
        target: xi.clone(),
        epsilon: eps.clone(),
        value,
        error,
        numerator,
        denominator,
        method,
    };
    if !result.verify(spec)? {
        return Err(Error::ClosedFormMismatch(format!(
            "approximation {}/{} of {} failed verification for {spec}",
            result.numerator,
            result.denominator,
            fmt_rational(xi)
        )));
    }
    Ok(result)
}

/// A quotient `p/q` with `p, q ∈ {2^e, 3^e : 2 ≤ e ≤ exp_bound}`, `p ≠ q`,
/// and `|p/q - xi| < eps`.
///
/// Among all such pairs the one with the smallest larger exponent wins,
/// then the smallest denominator, then the smallest numerator.
///
/// For a fixed numerator the admissible denominator exponents form a short
/// real interval in log space, so each exponent level costs O(1) candidate
/// checks. Logarithms only nominate candidates (with slack); acceptance is
/// decided by exact integer comparison.
pub fn approximate_power_pair(xi: &Rational, eps: &Rational, exp_bound: u64) -> Result<ApproxResult, Error> {
    check_target(xi, eps)?;
    if exp_bound < 2 {
        return Err(Error::InvalidArgument(format!("exp_bound must be >= 2, got {exp_bound}")));
    }
    // |p - xi·q| < eps·q  ⇔  |p·xd·ed - xn·ed·q| < en·xd·q
    let (xn, xd) = (xi.numer().clone(), xi.denom().clone());
    let (en, ed) = (eps.numer().clone(), eps.denom().clone());
    let close = |p: &BigUint, q: &BigUint| {
        let p = BigInt::from_biguint(Sign::Plus, p.clone());
        let q = BigInt::from_biguint(Sign::Plus, q.clone());
        (&p * &xd * &ed - &xn * &ed * &q).abs() < &en * &xd * &q
    };
    // log-space window for ln(p/q): (ln(xi - eps), ln(xi + eps)), widened
    const SLACK: f64 = 1e-6;
    let upper = ln_rational(&(xi + eps)) + SLACK;
    let lower = if eps < xi { ln_rational(&(xi - eps)) - SLACK } else { f64::NEG_INFINITY };
    let bases = [2u64, 3];
    let logs = [2f64.ln(), 3f64.ln()];
    // exponents e in [lo, hi] with fixed + sign·e·ln(base) inside (lower, upper)
    let nominate = |fixed: f64, sign: f64, log_b: f64, lo: u64, hi: u64| -> std::ops::RangeInclusive<u64> {
        let (a, b) = ((lower - fixed) * sign / log_b, (upper - fixed) * sign / log_b);
        let (from, to) = if a <= b { (a, b) } else { (b, a) };
        let from = if from.is_finite() { (from.floor().max(lo as f64)) as u64 } else { lo };
        let to = if to.is_finite() { (to.ceil().min(hi as f64).max(0.0)) as u64 } else { hi };
        from.max(lo)..=to.min(hi)
    };
    let power = |i: usize, e: u64| num_traits::pow(BigUint::from(bases[i]), e as usize);
    for m in 2..=exp_bound {
        let mut best: Option<(BigUint, BigUint, ApproxMethod)> = None;
        let mut consider = |ni: usize, ne: u64, di: usize, de: u64| {
            if ni == di && ne == de {
                return;
            }
            let gap = ne as f64 * logs[ni] - de as f64 * logs[di];
            if !(gap > lower && gap < upper) {
                return;
            }
            let (p, q) = (power(ni, ne), power(di, de));
            if !close(&p, &q) {
                return;
            }
            if best.as_ref().is_none_or(|(bp, bq, _)| (&q, &p) < (bq, bp)) {
                let method =
                    ApproxMethod::PowerPair { num_base: bases[ni], num_exp: ne, den_base: bases[di], den_exp: de };
                best = Some((p, q, method));
            }
        };
        for ni in 0..2 {
            for di in 0..2 {
                // numerator at level m: ln p - e·ln q_base in window
                for de in nominate(m as f64 * logs[ni], -1.0, logs[di], 2, m) {
                    consider(ni, m, di, de);
                }
                // denominator at level m, numerator below it
                for ne in nominate(-(m as f64) * logs[di], 1.0, logs[ni], 2, m - 1) {
                    consider(ni, ne, di, m);
                }
            }
        }
        if let Some((p, q, method)) = best {
            return finish(&SetSpec::ap_free(), xi, eps, p, q, method);
        }
    }
    Err(Error::BoundExhausted {
        bound: exp_bound,
        hint: format!("no power pair within {} of {}; raise exp_bound", fmt_rational(eps), fmt_rational(xi)),
    })
}

/// Natural logarithm of a positive rational, safe for huge parts.
fn ln_rational(x: &Rational) -> f64 {
    fn ln_big(n: &BigInt) -> f64 {
        let bits = n.bits();
        let shift = bits.saturating_sub(960);
        let head = (n >> shift).to_f64().unwrap_or(f64::MAX);
        head.ln() + shift as f64 * 2f64.ln()
    }
    ln_big(x.numer()) - ln_big(x.denom())
}

/// Retries [`approximate_power_pair`], doubling the exponent bound from
/// `start` until it succeeds or passes `max`.
pub fn approximate_power_pair_doubling(
    xi: &Rational,
    eps: &Rational,
    start: u64,
    max: u64,
) -> Result<ApproxResult, Error> {
    let mut bound = start.max(2);
    loop {
        match approximate_power_pair(xi, eps, bound) {
            Err(Error::BoundExhausted { .. }) if bound < max => bound = (bound * 2).min(max),
            other => return other,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Dense { reason: String },
    NotDense { certificate: GapCertificate },
    Unknown { reason: String },
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Dense { .. } => "dense",
            Classification::NotDense { .. } => "not-dense",
            Classification::Unknown { .. } => "unknown",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Dense { reason } => write!(f, "dense: {reason}"),
            Classification::NotDense { certificate } => write!(f, "not dense: gap {certificate}"),
            Classification::Unknown { reason } => write!(f, "unknown: {reason}"),
        }
    }
}

fn not_dense(spec: &SetSpec) -> Result<Classification, Error> {
    Ok(Classification::NotDense { certificate: certified_gap(spec, 0)? })
}

/// Decides whether `R(A)` is dense in `[0, ∞)` for the families where this is known.
pub fn classify_fractional_density(spec: &SetSpec) -> Result<Classification, Error> {
    spec.validate()?;
    let dense = |reason: String| Ok(Classification::Dense { reason });
    let unknown = |reason: String| Ok(Classification::Unknown { reason });
    match spec {
        SetSpec::IntervalUnion { a, b } => {
            if b <= &(a * a) {
                dense(format!("b = {} <= a^2 = {}", short_rational(b), short_rational(&(a * a))))
            } else {
                not_dense(spec)
            }
        }
        SetSpec::LeadingDigit { base, .. } => {
            let Some(f) = spec.interval_family() else {
                return unknown("leading digits are not contiguous".into());
            };
            let spread = &f.upper / &f.lower;
            if f.lower == Rational::one() {
                if f.base <= &spread * &spread {
                    dense(format!(
                        "same set as interval-union(a={}, b={base}) and {base} <= a^2",
                        short_rational(&f.upper)
                    ))
                } else {
                    not_dense(spec)
                }
            } else if &spread * &spread < f.base {
                not_dense(spec)
            } else {
                unknown(format!("({})^2 >= {base} with smallest digit above 1", short_rational(&spread)))
            }
        }
        SetSpec::GeometricPowers { .. } | SetSpec::Explicit(_) => not_dense(spec),
        SetSpec::Periodic { residues, .. } if residues.is_empty() => not_dense(spec),
        SetSpec::Periodic { .. } => dense("contains an infinite arithmetic progression".into()),
        SetSpec::FactorialBlocks(part) => dense(format!(
            "part {} contains runs [m, M] of consecutive integers with M/m unbounded",
            if *part == Part::A { "A" } else { "B" }
        )),
        SetSpec::Union(l, r) => {
            let twos_threes = |x: &SetSpec, y: &SetSpec| {
                matches!(
                    (x, y),
                    (SetSpec::GeometricPowers { base: 2, .. }, SetSpec::GeometricPowers { base: 3, .. })
                )
            };
            if twos_threes(l, r) || twos_threes(r, l) {
                return dense("quotients 2^a/3^b are dense since log 2/log 3 is irrational".into());
            }
            for side in [l, r] {
                if let Classification::Dense { reason } = classify_fractional_density(side)? {
                    return dense(format!("{side} is dense ({reason})"));
                }
            }
            if spec.is_finite() {
                return not_dense(spec);
            }
            unknown("no rule decides this union".into())
        }
    }
}

/// An interval union with lower density exactly `delta` and a gap in its
/// quotient set, for `0 ≤ delta < 1/2`; `delta = 0` gives the powers of 2.
///
/// With `ε = 1/δ - 2` take `a = 1 + ε/2` and `b = 1 + ε + ε²/2`, so that
/// `(a-1)/(b-1) = δ` and `a² = b - ε²/4 < b`.
pub fn build_delta_family(delta: &Rational) -> Result<SetSpec, Error> {
    if delta.is_negative() || delta >= &ratio(1, 2) {
        return Err(Error::InvalidArgument(format!("delta must lie in [0, 1/2), got {}", fmt_rational(delta))));
    }
    if delta.is_zero() {
        return SetSpec::powers(2, 1);
    }
    let one = Rational::one();
    let e = delta.recip() - Rational::from_integer(2.into());
    let half = ratio(1, 2);
    let a = &one + &e * &half;
    let b = &one + &e + &e * &e * &half;
    SetSpec::interval_union(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::closed_form_lower_density;
    use crate::numeric::{fraction, int, nat};
    use crate::quotient::verify_gap;
    use proptest::prelude::*;

    fn iu(a: Rational, b: i64) -> SetSpec {
        SetSpec::interval_union(a, int(b)).unwrap()
    }

    #[test]
    fn direct_case_examples() {
        let spec = iu(int(2), 3);
        let r = approximate_interval_union(&spec, &int(10), &ratio(1, 100)).unwrap();
        assert_eq!((r.numerator.clone(), r.denominator.clone()), (nat(2430), nat(243)));
        assert_eq!(r.method, ApproxMethod::IntervalUnion { j: 2, k: 5, offset: nat(243), mirrored: false });
        assert_eq!(r.error, int(0));
        let r = approximate_interval_union(&spec, &ratio(21, 2), &ratio(1, 100)).unwrap();
        assert_eq!(r.value, ratio(2551, 243));
        assert_eq!(r.error, ratio(1, 486));
    }

    #[test]
    fn mirrored_case() {
        // 3 sits in the hole [2, 4) of interval-union(2, 4)
        let spec = iu(int(2), 4);
        let r = approximate_interval_union(&spec, &int(3), &ratio(1, 1000)).unwrap();
        assert!(matches!(r.method, ApproxMethod::IntervalUnion { mirrored: true, .. }));
        assert!(r.verify(&spec).unwrap());
        assert!(r.value <= int(3));
    }

    #[test]
    fn edge_of_block_is_capped() {
        // xi = a*b^j exactly: floor lands on the first non-member
        let spec = iu(int(2), 4);
        let r = approximate_interval_union(&spec, &int(8), &ratio(1, 10)).unwrap();
        assert!(r.verify(&spec).unwrap());
        assert!(r.value < int(8));
    }

    #[test]
    fn rejects_unsuitable_sets() {
        assert!(matches!(
            approximate_interval_union(&iu(int(2), 5), &int(3), &ratio(1, 10)),
            Err(Error::NotFractionallyDense(_))
        ));
        let frac_b = SetSpec::interval_union(ratio(5, 4), ratio(3, 2)).unwrap();
        assert!(matches!(approximate_interval_union(&frac_b, &int(3), &ratio(1, 10)), Err(Error::Unsupported(_))));
        assert!(approximate_interval_union(&iu(int(2), 4), &int(0), &ratio(1, 10)).is_err());
        assert!(approximate_interval_union(&iu(int(2), 4), &int(1), &int(0)).is_err());
    }

    proptest! {
        #[test]
        fn interval_union_approximations_verify(
            a_num in 3i64..20, b in 2i64..12, p in 1u64..5000, q in 1u64..500, e in 1i64..2000
        ) {
            let a = ratio(a_num, 2);
            prop_assume!(int(b) >= a && int(b) <= &a * &a);
            let spec = iu(a, b);
            let xi = fraction(p, q);
            let eps = ratio(1, e);
            let r = approximate_interval_union(&spec, &xi, &eps).unwrap();
            prop_assert!(r.verify(&spec).unwrap());
            prop_assert!(r.value <= xi);
            prop_assert!(r.error < eps);
        }
    }

    #[test]
    fn power_pair_examples() {
        let r = approximate_power_pair(&int(1), &ratio(1, 5), 10).unwrap();
        assert_eq!((r.numerator.clone(), r.denominator.clone()), (nat(9), nat(8)));
        let r = approximate_power_pair(&int(4), &ratio(1, 100), 10).unwrap();
        assert_eq!((r.numerator.clone(), r.denominator.clone()), (nat(16), nat(4)));
        assert_eq!(r.value, int(4));
        let r = approximate_power_pair(&int(5), &ratio(1, 10), 10).unwrap();
        assert_eq!((r.numerator, r.denominator), (nat(81), nat(16)));
        assert!(matches!(
            approximate_power_pair(&int(5), &ratio(1, 1_000_000), 3),
            Err(Error::BoundExhausted { bound: 3, .. })
        ));
    }

    /// Exhaustive oracle over all pairs below the bound.
    fn power_pair_oracle(xi: &Rational, eps: &Rational, bound: u64) -> Option<(u64, Natural, Natural)> {
        let mut all = Vec::new();
        for base in [2u32, 3] {
            for e in 2..=bound {
                all.push((e, num_traits::pow(BigUint::from(base), e as usize)));
            }
        }
        let mut best: Option<(u64, Natural, Natural)> = None;
        for (ep, p) in &all {
            for (eq, q) in &all {
                if p == q {
                    continue;
                }
                let v = from_natural(p) / from_natural(q);
                if (&v - xi).abs() < *eps {
                    let key = ((*ep).max(*eq), q.clone(), p.clone());
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        best
    }

    proptest! {
        #[test]
        fn power_pair_matches_oracle(p in 1u64..200, q in 1u64..50, e in 2i64..200) {
            let xi = fraction(p, q);
            let eps = ratio(1, e);
            let oracle = power_pair_oracle(&xi, &eps, 12);
            match approximate_power_pair(&xi, &eps, 12) {
                Ok(r) => {
                    let (_, oq, op) = oracle.expect("search found a pair the oracle did not");
                    prop_assert_eq!((r.numerator.clone(), r.denominator.clone()), (op, oq));
                    prop_assert!(r.verify(&SetSpec::ap_free()).unwrap());
                }
                Err(Error::BoundExhausted { .. }) => prop_assert!(oracle.is_none()),
                Err(other) => prop_assert!(false, "unexpected {other}"),
            }
        }
    }

    #[test]
    fn doubling_reaches_fine_targets() {
        let r = approximate_power_pair_doubling(&ratio(7, 3), &ratio(1, 1000), 4, 4096).unwrap();
        assert!(r.verify(&SetSpec::ap_free()).unwrap());
    }

    #[test]
    fn classification_examples() {
        let c = classify_fractional_density(&iu(int(2), 5)).unwrap();
        match c {
            Classification::NotDense { certificate } => {
                assert_eq!((certificate.lo, certificate.hi), (int(2), ratio(5, 2)))
            }
            other => panic!("{other}"),
        }
        assert_eq!(classify_fractional_density(&iu(int(2), 4)).unwrap().label(), "dense");
        assert_eq!(classify_fractional_density(&SetSpec::ap_free()).unwrap().label(), "dense");
        let swapped = SetSpec::union(SetSpec::powers(3, 2).unwrap(), SetSpec::powers(2, 2).unwrap());
        assert_eq!(classify_fractional_density(&swapped).unwrap().label(), "dense");
        let ld = SetSpec::leading_digit(10, [1]).unwrap();
        match classify_fractional_density(&ld).unwrap() {
            Classification::NotDense { certificate } => {
                assert_eq!((certificate.lo, certificate.hi), (int(2), int(5)))
            }
            other => panic!("{other}"),
        }
        let ld = SetSpec::leading_digit(10, [1, 2, 3]).unwrap();
        assert_eq!(classify_fractional_density(&ld).unwrap().label(), "dense");
        let ld = SetSpec::leading_digit(5, [3, 4]).unwrap();
        assert_eq!(classify_fractional_density(&ld).unwrap().label(), "not-dense");
        let ld = SetSpec::leading_digit(10, [2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(classify_fractional_density(&ld).unwrap().label(), "unknown");
        let ld = SetSpec::leading_digit(10, [1, 3]).unwrap();
        assert_eq!(classify_fractional_density(&ld).unwrap().label(), "unknown");
        for p in [Part::A, Part::B] {
            assert_eq!(classify_fractional_density(&SetSpec::FactorialBlocks(p)).unwrap().label(), "dense");
        }
        assert_eq!(classify_fractional_density(&SetSpec::powers(2, 1).unwrap()).unwrap().label(), "not-dense");
        assert_eq!(classify_fractional_density(&SetSpec::explicit([2, 3]).unwrap()).unwrap().label(), "not-dense");
        let mixed = SetSpec::union(iu(int(2), 5), SetSpec::powers(2, 0).unwrap());
        assert_eq!(classify_fractional_density(&mixed).unwrap().label(), "unknown");
        let with_dense = SetSpec::union(iu(int(2), 5), iu(int(2), 3));
        assert_eq!(classify_fractional_density(&with_dense).unwrap().label(), "dense");
    }

    #[test]
    fn not_dense_certificates_verify() {
        for spec in [
            iu(int(2), 5),
            iu(int(3), 10),
            SetSpec::leading_digit(10, [1]).unwrap(),
            SetSpec::leading_digit(5, [3, 4]).unwrap(),
            SetSpec::powers(2, 1).unwrap(),
            SetSpec::powers(5, 0).unwrap(),
            SetSpec::explicit([2, 3, 11]).unwrap(),
        ] {
            let Classification::NotDense { certificate } = classify_fractional_density(&spec).unwrap() else {
                panic!("{spec}");
            };
            assert!(verify_gap(&spec, &certificate, 100_000).unwrap(), "{spec}");
        }
    }

    #[test]
    fn delta_family_values() {
        let cases = [
            (ratio(1, 4), int(2), int(5)),
            (ratio(2, 5), ratio(5, 4), ratio(13, 8)),
            (ratio(1, 10), int(5), int(41)),
            (ratio(49, 100), ratio(50, 49), ratio(2501, 2401)),
        ];
        for (delta, a, b) in cases {
            let spec = build_delta_family(&delta).unwrap();
            assert_eq!(spec, SetSpec::IntervalUnion { a: a.clone(), b: b.clone() });
            assert_eq!(closed_form_lower_density(&spec).unwrap(), delta);
            assert!(&a * &a < b);
        }
        assert_eq!(build_delta_family(&int(0)).unwrap(), SetSpec::powers(2, 1).unwrap());
        assert!(build_delta_family(&ratio(1, 2)).is_err());
        assert!(build_delta_family(&ratio(-1, 3)).is_err());
    }
}
