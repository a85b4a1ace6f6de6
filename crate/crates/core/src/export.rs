//! JSON renderings of results.
//!
//! Rationals are `"p/q"` strings. Fields ending in `_decimal` carry a
//! 15-significant-digit rendering for reading only. Objects use sorted keys,
//! so output is byte-stable.

use serde_json::{json, Value};

use crate::approx::{ApproxMethod, ApproxResult, Classification};
use crate::density::DensityEstimate;
use crate::numeric::{fmt_rational, to_decimal, Rational};
use crate::partition::{PartitionSpec, RefutationWitness};
use crate::progression::{ApProofReport, Progression};
use crate::quotient::{GapCertificate, GapKind, QuotientWindow};
use crate::setspec::SetSpec;

const DIGITS: usize = 15;

pub fn rational(x: &Rational) -> Value {
    Value::String(fmt_rational(x))
}

pub fn decimal(x: &Rational) -> Value {
    Value::String(to_decimal(x, DIGITS))
}

pub fn gap(g: &GapCertificate) -> Value {
    let mut v = json!({
        "lo": rational(&g.lo),
        "hi": rational(&g.hi),
        "lo_decimal": decimal(&g.lo),
        "hi_decimal": decimal(&g.hi),
        "closed": g.is_closed(),
    });
    match &g.kind {
        GapKind::Analytic { family, ell } => {
            v["kind"] = json!("analytic");
            v["family"] = json!(family);
            v["ell"] = json!(ell);
        }
        GapKind::EmpiricalToCutoff { cutoff } => {
            v["kind"] = json!("empirical");
            v["cutoff"] = json!(cutoff);
        }
    }
    v
}

pub fn gaps(spec: &SetSpec, cutoff: u64, lo: &Rational, hi: &Rational, gaps: &[GapCertificate]) -> Value {
    json!({
        "spec": spec.to_string(),
        "cutoff": cutoff,
        "window": [rational(lo), rational(hi)],
        "gaps": gaps.iter().map(gap).collect::<Vec<_>>(),
    })
}

pub fn window(w: &QuotientWindow) -> Value {
    json!({
        "spec": w.spec.to_string(),
        "cutoff": w.cutoff,
        "window": [rational(&w.lo), rational(&w.hi)],
        "count": w.quotients.len(),
        "quotients": w.quotients.iter().map(|q| json!({
            "value": rational(&q.value),
            "num": q.numerator.to_string(),
            "den": q.denominator.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn approx(r: &ApproxResult) -> Value {
    let mut v = json!({
        "target": rational(&r.target),
        "epsilon": rational(&r.epsilon),
        "witness": { "num": r.numerator.to_string(), "den": r.denominator.to_string() },
        "value": rational(&r.value),
        "value_decimal": decimal(&r.value),
        "error": rational(&r.error),
        "error_decimal": decimal(&r.error),
    });
    match &r.method {
        ApproxMethod::IntervalUnion { j, k, offset, mirrored } => {
            v["method"] = json!(if *mirrored { "interval-union-mirrored" } else { "interval-union" });
            v["j"] = json!(j);
            v["k"] = json!(k);
            v["offset"] = json!(offset.to_string());
        }
        ApproxMethod::PowerPair { num_base, num_exp, den_base, den_exp } => {
            v["method"] = json!("power-pair");
            v["form"] = json!(format!("{num_base}^{num_exp}/{den_base}^{den_exp}"));
        }
    }
    v
}

pub fn classification(spec: &SetSpec, c: &Classification) -> Value {
    let mut v = json!({ "spec": spec.to_string(), "verdict": c.label() });
    match c {
        Classification::Dense { reason } | Classification::Unknown { reason } => v["reason"] = json!(reason),
        Classification::NotDense { certificate } => v["certificate"] = gap(certificate),
    }
    v
}

pub fn density(
    spec: &SetSpec,
    depth: u32,
    est: &DensityEstimate,
    lower: Option<&Rational>,
    upper: Option<&Rational>,
) -> Value {
    let closed = |x: Option<&Rational>| x.map(rational).unwrap_or(Value::Null);
    let closed_dec = |x: Option<&Rational>| x.map(decimal).unwrap_or(Value::Null);
    json!({
        "spec": spec.to_string(),
        "depth": depth,
        "liminf_estimate": rational(&est.liminf_bound),
        "liminf_estimate_decimal": decimal(&est.liminf_bound),
        "limsup_estimate": rational(&est.limsup_bound),
        "limsup_estimate_decimal": decimal(&est.limsup_bound),
        "lower_density": closed(lower),
        "lower_density_decimal": closed_dec(lower),
        "upper_density": closed(upper),
        "upper_density_decimal": closed_dec(upper),
    })
}

pub fn progression(spec: &SetSpec, upto: u64, length: u64, found: Option<&Progression>) -> Value {
    json!({
        "set": spec.to_string(),
        "upto": upto,
        "ap_length_requested": length,
        "found": found.map(|p| json!({ "first": p.first, "diff": p.difference, "len": p.length })),
    })
}

pub fn run(spec: &SetSpec, upto: u64, run: Option<(u64, u64)>) -> Value {
    json!({
        "set": spec.to_string(),
        "upto": upto,
        "longest_run": run.map(|(start, length)| json!({ "start": start, "length": length })),
    })
}

pub fn proof_report(r: &ApProofReport) -> Value {
    json!({
        "prefix_bound": r.prefix_bound,
        "members": r.members,
        "candidates": r.candidates,
        "two_led": r.two_led,
        "three_led": r.three_led,
        "parity_eliminated": r.parity_eliminated,
        "power_of_two_eliminated": r.power_of_two_eliminated,
        "mod_three_eliminated": r.mod_three_eliminated,
        "progressions_found": r.progressions_found,
        "argument_failures": r.argument_failures,
        "consistent": r.consistent(),
    })
}

pub fn partition_check(p: &PartitionSpec, upto: u64, ok: bool) -> Value {
    json!({
        "partition": p.name.to_string(),
        "parts": p.parts.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "upto": upto,
        "is_partition": ok,
    })
}

pub fn witness(p: &PartitionSpec, w: &RefutationWitness) -> Value {
    json!({
        "partition": p.name.to_string(),
        "parts": p.parts.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "part_index": w.part_index,
        "numerator": w.numerator.to_string(),
        "denominator": w.denominator.to_string(),
        "quotient": rational(&w.quotient),
        "quotient_decimal": decimal(&w.quotient),
        "violated_gap": { "center": rational(&w.center), "epsilon": rational(&w.epsilon) },
        "branch": w.branch,
        "trace": w.trace.iter().map(|(k, v)| json!({ "step": k, "value": v.to_string() })).collect::<Vec<_>>(),
    })
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
