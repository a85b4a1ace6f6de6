//! Windows of the quotient set, gap scans and gap certificates.
//!
//! Elements up to a cutoff are materialized once as a sorted `u64` list.
//! For a fixed denominator `q` the numerators landing in `[lo, hi]` form a
//! contiguous slice of that list, found with two binary searches against
//! exact integer thresholds `⌈lo·q⌉` and `⌊hi·q⌋`; all pairs are never formed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::numeric::{cmp_fractions, fmt_rational, fraction, parts, rat_pow, Natural, Rational};
use crate::setspec::{short_rational, SetSpec};
use crate::Error;

/// Cell-count ceiling for [`gap_scan`].
const MAX_SCAN_CELLS: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub value: Rational,
    pub numerator: u64,
    pub denominator: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientWindow {
    pub spec: SetSpec,
    pub cutoff: u64,
    pub lo: Rational,
    pub hi: Rational,
    /// Distinct values in `[lo, hi]`, ascending, each with its smallest-denominator witness.
    pub quotients: Vec<Quotient>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapKind {
    /// Holds for the whole infinite set; the interval is closed.
    Analytic { family: String, ell: i64 },
    /// Holds for elements up to `cutoff`; the interval is open.
    EmpiricalToCutoff { cutoff: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCertificate {
    pub lo: Rational,
    pub hi: Rational,
    pub kind: GapKind,
}

impl GapCertificate {
    pub fn is_analytic(&self) -> bool {
        matches!(self.kind, GapKind::Analytic { .. })
    }

    /// Analytic certificates cover `[lo, hi]`; empirical ones `(lo, hi)`.
    pub fn is_closed(&self) -> bool {
        self.is_analytic()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Whether this certificate's interval contains `[lo, hi]`.
    pub fn covers(&self, lo: &Rational, hi: &Rational) -> bool {
        if self.is_closed() {
            &self.lo <= lo && hi <= &self.hi
        } else {
            &self.lo <= lo && hi <= &self.hi && lo < hi
        }
    }
}

impl fmt::Display for GapCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = if self.is_closed() { ('[', ']') } else { ('(', ')') };
        write!(f, "{open}{}, {}{close}", short_rational(&self.lo), short_rational(&self.hi))?;
        match &self.kind {
            GapKind::Analytic { family, ell } => write!(f, " analytic, {family}, l={ell}"),
            GapKind::EmpiricalToCutoff { cutoff } => write!(f, " empirical to cutoff {cutoff}"),
        }
    }
}

/// `r·q` rounded up or down, exact, saturating at `u64::MAX`.
#[derive(Clone, Debug)]
struct Scale {
    num: BigUint,
    den: BigUint,
    small: Option<(u128, u128)>,
}

impl Scale {
    fn new(r: &Rational) -> Self {
        let (num, den) = parts(r);
        let small = match (num.to_u64(), den.to_u64()) {
            (Some(n), Some(d)) => Some((n as u128, d as u128)),
            _ => None,
        };
        Scale { num, den, small }
    }

    fn ceil(&self, q: u64) -> u64 {
        if let Some((n, d)) = self.small {
            return sat((n * q as u128).div_ceil(d));
        }
        sat_big(&(&self.num * q).div_ceil(&self.den))
    }

    fn floor(&self, q: u64) -> u64 {
        if let Some((n, d)) = self.small {
            return sat((n * q as u128) / d);
        }
        sat_big(&((&self.num * q) / &self.den))
    }
}

fn sat(v: u128) -> u64 {
    u64::try_from(v).unwrap_or(u64::MAX)
}

fn sat_big(v: &BigUint) -> u64 {
    v.to_u64().unwrap_or(u64::MAX)
}

fn check_window(lo: &Rational, hi: &Rational) -> Result<(), Error> {
    if !lo.is_positive() {
        return Err(Error::InvalidArgument(format!("window must start above 0, got {}", fmt_rational(lo))));
    }
    if lo >= hi {
        return Err(Error::InvalidArgument(format!(
            "empty or inverted window [{}, {}]",
            fmt_rational(lo),
            fmt_rational(hi)
        )));
    }
    Ok(())
}

/// Numerator slice bounds `[start, end)` of `elems` with `lo ≤ p/q ≤ hi`.
#[inline]
fn closed_slice(elems: &[u64], lo: &Scale, hi: &Scale, q: u64) -> (usize, usize) {
    let lo_t = lo.ceil(q);
    let hi_t = hi.floor(q);
    let start = elems.partition_point(|&p| p < lo_t);
    let end = elems.partition_point(|&p| p <= hi_t);
    (start, end.max(start))
}

/// Numerator slice bounds with `lo < p/q < hi`.
#[inline]
fn open_slice(elems: &[u64], lo: &Scale, hi: &Scale, q: u64) -> (usize, usize) {
    let lo_t = lo.floor(q);
    let hi_t = hi.ceil(q);
    let start = elems.partition_point(|&p| p <= lo_t);
    let end = elems.partition_point(|&p| p < hi_t);
    (start, end.max(start))
}

/// All distinct quotients in `[lo, hi]` of members up to `cutoff`.
pub fn quotients_in_window(
    spec: &SetSpec,
    cutoff: u64,
    lo: &Rational,
    hi: &Rational,
) -> Result<QuotientWindow, Error> {
    check_window(lo, hi)?;
    if cutoff == 0 {
        return Err(Error::InvalidArgument("cutoff must be >= 1".into()));
    }
    let elems = spec.enumerate_upto(cutoff);
    let quotients = window_quotients(&elems, lo, hi);
    Ok(QuotientWindow { spec: spec.clone(), cutoff, lo: lo.clone(), hi: hi.clone(), quotients })
}

fn window_quotients(elems: &[u64], lo: &Rational, hi: &Rational) -> Vec<Quotient> {
    let (lo_s, hi_s) = (Scale::new(lo), Scale::new(hi));
    let mut pairs: Vec<(u64, u64)> = elems
        .par_iter()
        .flat_map_iter(|&q| {
            let (s, e) = closed_slice(elems, &lo_s, &hi_s, q);
            elems[s..e].iter().map(move |&p| (p, q))
        })
        .collect();
    // by value, then smallest denominator first
    pairs.par_sort_unstable_by(|&(p1, q1), &(p2, q2)| cmp_fractions(p1, q1, p2, q2).then(q1.cmp(&q2)));
    pairs.dedup_by(|&mut (p2, q2), &mut (p1, q1)| cmp_fractions(p1, q1, p2, q2) == Ordering::Equal);
    pairs
        .into_iter()
        .map(|(p, q)| Quotient { value: fraction(p, q), numerator: p, denominator: q })
        .collect()
}

/// Whether no quotient of `elems` lies in the interval (closed or open).
fn window_is_empty(elems: &[u64], lo: &Rational, hi: &Rational, closed: bool) -> bool {
    let (lo_s, hi_s) = (Scale::new(lo), Scale::new(hi));
    !elems.par_iter().any(|&q| {
        let (s, e) = if closed {
            closed_slice(elems, &lo_s, &hi_s, q)
        } else {
            open_slice(elems, &lo_s, &hi_s, q)
        };
        s < e
    })
}

/// Checks a certificate against members up to `cutoff`.
pub fn verify_gap(spec: &SetSpec, cert: &GapCertificate, cutoff: u64) -> Result<bool, Error> {
    check_window(&cert.lo, &cert.hi)?;
    let elems = spec.enumerate_upto(cutoff);
    Ok(window_is_empty(&elems, &cert.lo, &cert.hi, cert.is_closed()))
}

/// Cell edges `lo + i·step`, the last clipped to `hi`, with exact thresholds
/// `T_i(q) = ⌈e_i·q⌉` so that `p/q ≥ e_i ⇔ p ≥ T_i(q)`, and `T_n(q) = ⌊hi·q⌋ + 1`.
struct EdgeGrid {
    base: BigUint,
    step: BigUint,
    den: BigUint,
    small: Option<(u128, u128, u128)>,
    cells: usize,
    hi: Scale,
}

impl EdgeGrid {
    fn new(lo: &Rational, hi: &Rational, step: &Rational) -> Result<Self, Error> {
        let den = lo.denom().lcm(step.denom());
        let den_u = den.magnitude().clone();
        let base = (lo * Rational::from_integer(den.clone())).to_integer().magnitude().clone();
        let step_n = (step * Rational::from_integer(den.clone())).to_integer().magnitude().clone();
        let cells = ((hi - lo) / step).ceil().to_integer();
        let cells = cells
            .to_u64()
            .filter(|&c| c <= MAX_SCAN_CELLS)
            .ok_or_else(|| Error::TooLarge(format!("gap scan would need {cells} cells; raise min_width")))?;
        let small = match (base.to_u64(), step_n.to_u64(), den_u.to_u64()) {
            (Some(b), Some(s), Some(d)) => Some((b as u128, s as u128, d as u128)),
            _ => None,
        };
        Ok(EdgeGrid { base, step: step_n, den: den_u, small, cells: cells as usize, hi: Scale::new(hi) })
    }

    fn threshold(&self, i: usize, q: u64) -> u64 {
        if i >= self.cells {
            return self.hi.floor(q).saturating_add(1);
        }
        if let Some((b, s, d)) = self.small {
            let v = (s.checked_mul(i as u128))
                .and_then(|x| x.checked_add(b))
                .and_then(|x| x.checked_mul(q as u128));
            if let Some(v) = v {
                return sat(v.div_ceil(d));
            }
        }
        let v = (&self.step * i as u64 + &self.base) * q;
        sat_big(&v.div_ceil(&self.den))
    }

    /// Cell holding `p/q`, given `lo ≤ p/q ≤ hi`.
    fn cell_of(&self, p: u64, q: u64) -> usize {
        // floor((p·den - base·q) / (step·q))
        let num = BigInt::from(p) * BigInt::from(self.den.clone()) - BigInt::from(self.base.clone()) * q;
        let den = BigInt::from(self.step.clone()) * q;
        let c = num.div_floor(&den).to_u64().unwrap_or(0) as usize;
        c.min(self.cells - 1)
    }
}

/// Maximal open gaps of width `≥ min_width` between consecutive quotients
/// in `[lo, hi]` (clipped to the window), for members up to `cutoff`.
///
/// The window is cut into cells of width `min_width/2`; any qualifying gap
/// swallows a whole cell. Pass one finds the cells no quotient reaches,
/// pass two computes the exact quotients bordering each run of such cells.
pub fn gap_scan(
    spec: &SetSpec,
    cutoff: u64,
    lo: &Rational,
    hi: &Rational,
    min_width: &Rational,
) -> Result<Vec<GapCertificate>, Error> {
    check_window(lo, hi)?;
    if !min_width.is_positive() {
        return Err(Error::InvalidArgument("min_width must be positive".into()));
    }
    let elems = spec.enumerate_upto(cutoff);
    let step = min_width / Rational::from_integer(2.into());
    let grid = EdgeGrid::new(lo, hi, &step)?;
    let runs = empty_runs(&elems, &grid);
    let lo_s = Scale::new(lo);
    let mut gaps = Vec::new();
    for (s, t) in runs {
        let left = if s == 0 {
            lo.clone()
        } else {
            // largest quotient below e_s but not below lo
            let best = elems
                .par_iter()
                .filter_map(|&q| {
                    let below = elems.partition_point(|&p| p < grid.threshold(s, q));
                    let floor = lo_s.ceil(q);
                    (below > 0 && elems[below - 1] >= floor).then(|| (elems[below - 1], q))
                })
                .max_by(|a, b| cmp_fractions(a.0, a.1, b.0, b.1));
            best.map(|(p, q)| fraction(p, q)).unwrap_or_else(|| lo.clone())
        };
        let right = if t == grid.cells {
            hi.clone()
        } else {
            // smallest quotient at or above e_t but not above hi
            let best = elems
                .par_iter()
                .filter_map(|&q| {
                    let at = elems.partition_point(|&p| p < grid.threshold(t, q));
                    let ceiling = grid.threshold(grid.cells, q);
                    (at < elems.len() && elems[at] < ceiling).then(|| (elems[at], q))
                })
                .min_by(|a, b| cmp_fractions(a.0, a.1, b.0, b.1));
            best.map(|(p, q)| fraction(p, q)).unwrap_or_else(|| hi.clone())
        };
        if &(&right - &left) >= min_width {
            gaps.push(GapCertificate { lo: left, hi: right, kind: GapKind::EmpiricalToCutoff { cutoff } });
        }
    }
    Ok(gaps)
}

/// Maximal runs `[s, t)` of cells hit by no quotient.
fn empty_runs(elems: &[u64], grid: &EdgeGrid) -> Vec<(usize, usize)> {
    let mut runs = vec![(0usize, grid.cells)];
    let mut next = Vec::new();
    for &q in elems {
        if runs.is_empty() {
            break;
        }
        next.clear();
        for &(s, t) in &runs {
            let mut pos = s;
            while pos < t {
                let start = elems.partition_point(|&p| p < grid.threshold(pos, q));
                if start == elems.len() || elems[start] >= grid.threshold(t, q) {
                    next.push((pos, t));
                    break;
                }
                let c = grid.cell_of(elems[start], q);
                debug_assert!(pos <= c && c < t);
                if pos < c {
                    next.push((pos, c));
                }
                pos = c + 1;
            }
        }
        std::mem::swap(&mut runs, &mut next);
    }
    runs
}

/// The `ℓ`-th member of the spec's analytic gap family.
///
/// * interval family `⋃[c·b^k, e·b^k)` with `(e/c)² < b`: `[(e/c)·b^ℓ, (c/e)·b^{ℓ+1}]`
/// * powers of `b`: the middle half `[b^ℓ(3+b)/4, b^ℓ(1+3b)/4]` of `(b^ℓ, b^{ℓ+1})`
/// * finite sets with maximum `M`: `[M+1+ℓ, M+2+ℓ]` for `ℓ ≥ 0`, reciprocals below
pub fn certified_gap(spec: &SetSpec, ell: i64) -> Result<GapCertificate, Error> {
    if let Some(f) = spec.interval_family() {
        let spread = &f.upper / &f.lower;
        if &spread * &spread >= f.base {
            return Err(Error::NoAnalyticCertificate(format!(
                "{spec}: ({})^2 >= {}, the set is fractionally dense",
                short_rational(&spread),
                short_rational(&f.base)
            )));
        }
        let lo = &spread * rat_pow(&f.base, ell);
        let hi = rat_pow(&f.base, ell + 1) / &spread;
        let family = format!(
            "blocks [{}*{b}^k, {}*{b}^k) with ({})^2 < {b}",
            short_rational(&f.lower),
            short_rational(&f.upper),
            short_rational(&spread),
            b = short_rational(&f.base)
        );
        return Ok(GapCertificate { lo, hi, kind: GapKind::Analytic { family, ell } });
    }
    match spec {
        SetSpec::GeometricPowers { base, .. } => {
            let b = Rational::from_integer((*base).into());
            let scale = rat_pow(&b, ell) / Rational::from_integer(4.into());
            let lo = &scale * (Rational::from_integer(3.into()) + &b);
            let hi = &scale * (Rational::one() + Rational::from_integer(3.into()) * &b);
            let family = format!("quotients are powers of {base}");
            Ok(GapCertificate { lo, hi, kind: GapKind::Analytic { family, ell } })
        }
        _ if spec.is_finite() => {
            let m = finite_max(spec).unwrap_or_else(Natural::one);
            let m = Rational::from_integer(BigInt::from(m));
            let family = format!("finite set, quotients within [1/{0}, {0}]", short_rational(&m));
            let (lo, hi) = if ell >= 0 {
                let lo = &m + Rational::from_integer((ell + 1).into());
                (lo.clone(), lo + Rational::one())
            } else {
                let lo = &m + Rational::from_integer((-ell).into());
                (Rational::one() / (&lo + Rational::one()), Rational::one() / lo)
            };
            Ok(GapCertificate { lo, hi, kind: GapKind::Analytic { family, ell } })
        }
        other => Err(Error::NoAnalyticCertificate(format!("{other} is not in a certifiable family"))),
    }
}

pub fn certified_gaps(spec: &SetSpec, ells: RangeInclusive<i64>) -> Result<Vec<GapCertificate>, Error> {
    ells.map(|ell| certified_gap(spec, ell)).collect()
}

/// Analytic certificates meeting `[lo, hi]`, in increasing order.
pub fn certified_gaps_in_window(spec: &SetSpec, lo: &Rational, hi: &Rational) -> Result<Vec<GapCertificate>, Error> {
    check_window(lo, hi)?;
    const MAX_STEPS: i64 = 100_000;
    let mut ell = 0i64;
    // walk down until the gap lies wholly below the window
    while certified_gap(spec, ell)?.hi >= *lo && ell > -MAX_STEPS {
        ell -= 1;
    }
    let mut out = Vec::new();
    loop {
        let g = certified_gap(spec, ell)?;
        if g.lo > *hi || ell > MAX_STEPS {
            break;
        }
        if g.hi >= *lo {
            out.push(g);
        }
        ell += 1;
    }
    Ok(out)
}

fn finite_max(spec: &SetSpec) -> Option<Natural> {
    match spec {
        SetSpec::Explicit(xs) => xs.last().cloned(),
        SetSpec::Union(l, r) => match (finite_max(l), finite_max(r)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        },
        _ => None,
    }
}

/// Maps a gap into `(0, 1]` using `R(A) = 1/R(A)`.
///
/// Gaps already inside `(0, 1]` are returned unchanged, gaps in `[1, ∞)` are
/// inverted to `[1/hi, 1/lo]`. A gap straddling 1 cannot be valid
/// (`1 = a/a ∈ R(A)`) and is returned as is.
pub fn normalize_gap_to_unit(cert: &GapCertificate) -> GapCertificate {
    let one = Rational::one();
    if cert.hi <= one || cert.lo < one || cert.lo.is_zero() {
        return cert.clone();
    }
    GapCertificate { lo: cert.hi.recip(), hi: cert.lo.recip(), kind: cert.kind.clone() }
}

/// `(α, β) ⊆ (0, 1]` from a unit-normalized gap.
pub fn unit_endpoints(cert: &GapCertificate) -> (Rational, Rational) {
    let n = normalize_gap_to_unit(cert);
    (n.lo, n.hi)
}

/// Exact checks relating a gap `(α, β) ⊆ (0, 1]` of `R(A)` to the densities of `A`:
/// `(1 + α/β)·d̲ ≤ α/β`, `d̲ ≤ (α/β)·min{d̄, 1 - d̄}` and `d̄ ≤ 1 - (β - α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityGapCheck {
    pub alpha: Rational,
    pub beta: Rational,
    pub lower: Rational,
    pub upper: Rational,
    pub lower_vs_ratio: bool,
    pub lower_vs_upper: bool,
    pub upper_vs_width: bool,
}

impl DensityGapCheck {
    pub fn new(cert: &GapCertificate, lower: &Rational, upper: &Rational) -> Self {
        let (alpha, beta) = unit_endpoints(cert);
        let one = Rational::one();
        let r = &alpha / &beta;
        let lower_vs_ratio = (&one + &r) * lower <= r;
        let tail = upper.clone().min(&one - upper);
        let lower_vs_upper = *lower <= &r * tail;
        let upper_vs_width = *upper <= &one - (&beta - &alpha);
        DensityGapCheck {
            alpha,
            beta,
            lower: lower.clone(),
            upper: upper.clone(),
            lower_vs_ratio,
            lower_vs_upper,
            upper_vs_width,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.lower_vs_ratio && self.lower_vs_upper && self.upper_vs_width
    }
}
