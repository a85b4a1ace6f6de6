//! Fixed-parameter checks behind `ratioset gem N`.
//!
//! These are lighter than the acceptance suite: bounds are 10^5 rather than
//! 10^6 and the random trials are replaced by a handful of fixed inputs.

use serde_json::json;

use ratioset::approx::{approximate_interval_union, approximate_power_pair_doubling, build_delta_family};
use ratioset::catalog::builtin_specs;
use ratioset::density::{closed_form_lower_density, closed_form_upper_density, stolz_cesaro_check};
use ratioset::numeric::{fmt_rational, int, ratio};
use ratioset::partition::{build_factorial, build_three_way, refute_two_partition, verify_partition};
use ratioset::progression::{find_progression, longest_consecutive_run, verify_no_3ap_proof_cases};
use ratioset::quotient::{certified_gap, certified_gaps, gap_scan, verify_gap, DensityGapCheck};
use ratioset::{Error, Rational, SetSpec};

const BOUND: u64 = 100_000;

pub struct Report {
    gem: u8,
    note: Option<&'static str>,
    checks: Vec<(String, bool, String)>,
}

impl Report {
    fn new(gem: u8) -> Self {
        Report { gem, note: None, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push((name.into(), pass, detail.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn render(&self) -> String {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|(name, pass, detail)| json!({ "name": name, "pass": pass, "detail": detail }))
            .collect();
        let v = json!({
            "gem": self.gem,
            "note": self.note,
            "checks": checks,
            "passed": self.passed(),
        });
        ratioset::export::render(&v)
    }
}

fn iu(a: Rational, b: i64) -> SetSpec {
    SetSpec::interval_union(a, int(b)).expect("valid parameters")
}

/// `{2..b} ∪ {2b..b^2} ∪ ...`: no wide gaps for small b, certified gaps from b = 5.
pub fn gem_one() -> Result<Report, Error> {
    let mut r = Report::new(1);
    for b in 2u64..=4 {
        let spec = iu(int(2), b as i64);
        let cutoff = b.pow(10);
        let gaps = gap_scan(&spec, cutoff, &ratio(1, b as i64), &int(b as i64), &ratio(b as i64, 1000))?;
        let detail = match gaps.first() {
            None => format!("no gap of width >= {b}/1000 in [1/{b}, {b}] at cutoff {b}^10"),
            Some(g) => format!("{} gaps, first {g}", gaps.len()),
        };
        r.check(format!("b={b} has no wide gaps"), gaps.is_empty(), detail);
    }
    for b in 5i64..=10 {
        let spec = iu(int(2), b);
        let certs = certified_gaps(&spec, 0..=2)?;
        let mut ok = true;
        for c in &certs {
            ok &= verify_gap(&spec, c, BOUND)?;
        }
        let shown: Vec<String> = certs.iter().map(|c| c.to_string()).collect();
        r.check(format!("b={b} gaps certified"), ok, shown.join(" "));
    }
    Ok(r)
}

/// Non-dense sets of every lower density below 1/2, and the density/gap inequalities.
pub fn gem_two() -> Result<Report, Error> {
    let mut r = Report::new(2);
    r.note = Some("the density statement itself is proved, not computed; the checks below are consistency checks");
    for delta in [int(0), ratio(1, 10), ratio(1, 4), ratio(2, 5), ratio(49, 100)] {
        let spec = build_delta_family(&delta)?;
        let d = closed_form_lower_density(&spec)?;
        let sparse = match &spec {
            SetSpec::IntervalUnion { a, b } => &(a * a) < b,
            _ => delta == int(0),
        };
        let cert = certified_gap(&spec, 0)?;
        let ok = d == delta && sparse && verify_gap(&spec, &cert, BOUND)?;
        r.check(format!("delta={}", fmt_rational(&delta)), ok, format!("{spec}, density {}, gap {cert}", fmt_rational(&d)));
    }
    let rejected = build_delta_family(&ratio(1, 2)).is_err();
    r.check("delta=1/2 rejected", rejected, "no non-dense set has lower density 1/2");
    let mut certs = 0;
    let mut failed = Vec::new();
    for spec in builtin_specs() {
        let (Ok(lower), Ok(upper)) = (closed_form_lower_density(&spec), closed_form_upper_density(&spec)) else {
            continue;
        };
        for ell in -2..=2 {
            let Ok(cert) = certified_gap(&spec, ell) else { break };
            if !DensityGapCheck::new(&cert, &lower, &upper).all_hold() {
                failed.push(format!("{spec} l={ell}"));
            }
            certs += 1;
        }
    }
    let detail = if failed.is_empty() { format!("{certs} built-in certificates") } else { failed.join(", ") };
    r.check("density bounds from certified gaps", failed.is_empty() && certs > 0, detail);
    Ok(r)
}

/// Partitions: one whose parts all have sparse quotient sets, and a refutation for two parts.
pub fn gem_three() -> Result<Report, Error> {
    let mut r = Report::new(3);
    let three = build_three_way();
    r.check("three-way split is a partition", verify_partition(&three, BOUND), format!("checked to {BOUND}"));
    for part in &three.parts {
        let mut ok = true;
        for c in certified_gaps(part, 0..=2)? {
            ok &= verify_gap(part, &c, BOUND)?;
        }
        r.check(format!("{part} has certified gaps"), ok, "l = 0, 1, 2");
    }
    let fact = build_factorial();
    r.check("factorial blocks form a partition", verify_partition(&fact, BOUND), format!("checked to {BOUND}"));
    let w = refute_two_partition(&fact, &int(2), &ratio(3, 2), &ratio(1, 20), 1_000_000)?;
    r.check(
        "factorial partition refuted near 2 or 3/2",
        w.verify(&fact)?,
        format!("{}/{} in part {} via {}", w.numerator, w.denominator, w.part_index, w.branch),
    );
    for n in 1u64..=6 {
        let (y, x) = stolz_cesaro_check(n)?;
        let expect_y = ratio(1, 2 * n as i64 + 3);
        let expect_x = int(1) / (int(1) + ratio(1, 2 * n as i64 + 1));
        r.check(
            format!("factorial block limit n={n}"),
            y == expect_y && x == expect_x,
            format!("y={}, x={}", fmt_rational(&y), fmt_rational(&x)),
        );
    }
    Ok(r)
}

/// No 3-term progressions in `{2^j} ∪ {3^k}`, yet its quotient set is dense.
pub fn gem_four() -> Result<Report, Error> {
    let mut r = Report::new(4);
    let ap = SetSpec::ap_free();
    let found = find_progression(&ap, BOUND, 3)?;
    r.check("no 3-term progression", found.is_none(), format!("searched to {BOUND}"));
    let report = verify_no_3ap_proof_cases(81)?;
    r.check(
        "exclusion argument covers every candidate",
        report.consistent(),
        format!(
            "{} candidates: {} parity, {} power of two, {} mod 3",
            report.candidates, report.parity_eliminated, report.power_of_two_eliminated, report.mod_three_eliminated
        ),
    );
    let run = longest_consecutive_run(&iu(int(2), 10), 10_000);
    r.check("interval union has long runs", run.map(|x| x.1) == Some(1000), format!("{run:?}"));
    let eps = ratio(1, 1000);
    for xi in [int(1), ratio(3, 2), ratio(5, 7), int(10), ratio(1, 10)] {
        let w = approximate_power_pair_doubling(&xi, &eps, 8, 1 << 16)?;
        r.check(
            format!("approximate {}", fmt_rational(&xi)),
            w.verify(&ap)?,
            format!("{}/{} within {}", w.numerator, w.denominator, fmt_rational(&eps)),
        );
    }
    let dense = iu(int(2), 3);
    let w = approximate_interval_union(&dense, &ratio(7, 3), &eps)?;
    r.check(format!("approximate 7/3 in {dense}"), w.verify(&dense)?, format!("{}/{}", w.numerator, w.denominator));
    Ok(r)
}
