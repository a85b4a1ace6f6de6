//! `ratioset`: quotient sets of integer sequences from the command line.
//!
//! Exit status is 0 on success, 1 when the computation itself fails
//! (no certificate, bound exhausted, a gem check fails), 2 for usage and
//! set-spec errors.

mod gems;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ratioset::approx::{
    approximate_interval_union, approximate_power_pair, approximate_power_pair_doubling, classify_fractional_density,
};
use ratioset::density::{closed_form_lower_density, closed_form_upper_density, estimate_lower_density, profile_csv};
use ratioset::lang::parse_spec;
use ratioset::numeric::{fmt_rational, parse_rational};
use ratioset::partition::{build_factorial, build_three_way, refute_two_partition, verify_partition, PartitionSpec};
use ratioset::progression::{find_progression, longest_consecutive_run, verify_no_3ap_proof_cases};
use ratioset::quotient::{certified_gaps_in_window, gap_scan, quotients_in_window};
use ratioset::{export, Error, Rational, SetSpec};

#[derive(Parser)]
#[command(name = "ratioset", version, about = "Quotient sets R(A) = {a/a' : a, a' in A} of integer sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the members up to a bound.
    Gen {
        #[arg(long)]
        set: String,
        #[arg(long)]
        upto: u64,
    },
    /// Estimate lower and upper density, with closed forms where known.
    Density {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 20)]
        depth: u32,
    },
    /// Quotients in a window, or the gaps between them.
    Gaps {
        #[arg(long)]
        set: String,
        #[arg(long)]
        cutoff: u64,
        /// `LO,HI`
        #[arg(long)]
        window: String,
        #[arg(long, default_value = "1/100")]
        min_width: String,
        /// Report analytic certificates meeting the window instead of scanning.
        #[arg(long)]
        analytic: bool,
        /// List the distinct quotients instead of the gaps.
        #[arg(long)]
        list: bool,
    },
    /// Decide whether the quotient set is dense.
    Classify {
        #[arg(long)]
        set: String,
    },
    /// Approximate a target by a quotient of members.
    Approx {
        #[arg(long)]
        set: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        eps: String,
        /// Largest exponent tried for the powers-of-2-and-3 set.
        #[arg(long, default_value_t = 64)]
        exp_bound: u64,
        /// Keep doubling the exponent bound up to this value.
        #[arg(long)]
        escalate_to: Option<u64>,
    },
    /// Arithmetic progressions, runs, and the 3-AP exclusion tally.
    Ap {
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        upto: u64,
        #[arg(long, default_value_t = 3)]
        length: u64,
        /// Report the longest run of consecutive members instead.
        #[arg(long)]
        run: bool,
        /// Tally the exclusion argument for {2^j} ∪ {3^k}, j, k >= 2.
        #[arg(long)]
        proof_cases: bool,
    },
    /// Check that a partition covers every integer exactly once.
    Partition {
        #[arg(long, value_enum, default_value_t = Named::ThreeWay)]
        partition: Named,
        /// Parts of a custom partition (2 or 3).
        #[arg(long = "part")]
        parts: Vec<String>,
        #[arg(long)]
        upto: u64,
    },
    /// Find a same-part quotient near alpha or beta in a 2-part partition.
    Refute {
        #[arg(long, value_enum, default_value_t = Named::Factorial)]
        partition: Named,
        #[arg(long = "part")]
        parts: Vec<String>,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 1_000_000)]
        search_bound: u64,
    },
    /// Pass/fail report for one of the four results (1-4).
    Gem { number: u8 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Named {
    /// Leading base-5 digit 1 / 2 / 3-4.
    ThreeWay,
    /// Leading base-5 digit 1 against the rest.
    ThreeWaySplit,
    Factorial,
    Custom,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(m) | Error::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn spec(text: &str) -> Result<SetSpec, Failure> {
    parse_spec(text).map_err(|e| Failure::Usage(format!("--set {text:?}: {e}")))
}

fn rational(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn window(text: &str) -> Result<(Rational, Rational), Failure> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| Failure::Usage(format!("--window expects LO,HI, got {text:?}")))?;
    Ok((rational("window", lo)?, rational("window", hi)?))
}

fn partition(named: Named, parts: &[String]) -> Result<PartitionSpec, Failure> {
    match named {
        Named::ThreeWay => Ok(build_three_way()),
        Named::Factorial => Ok(build_factorial()),
        Named::ThreeWaySplit => {
            let t = build_three_way();
            let rest = SetSpec::union(t.parts[1].clone(), t.parts[2].clone());
            Ok(PartitionSpec::custom(vec![t.parts[0].clone(), rest])?)
        }
        Named::Custom => {
            let specs = parts.iter().map(|p| spec(p)).collect::<Result<Vec<_>, _>>()?;
            PartitionSpec::custom(specs).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn json_only(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!("{what} has no CSV output; use --format json")));
    }
    Ok(())
}

/// Output text, and whether the subcommand's own checks passed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    let rendered = |v: serde_json::Value| Ok((export::render(&v), true));
    match &cli.command {
        Command::Gen { set, upto } => {
            let s = spec(set)?;
            let elems = s.enumerate_upto(*upto);
            if fmt == Format::Csv {
                let mut out = String::from("n\n");
                for n in &elems {
                    out.push_str(&format!("{n}\n"));
                }
                return Ok((out, true));
            }
            rendered(json!({ "set": s.to_string(), "upto": upto, "count": elems.len(), "elements": elems }))
        }
        Command::Density { set, depth } => {
            let s = spec(set)?;
            let est = estimate_lower_density(&s, *depth)?;
            if fmt == Format::Csv {
                let mut points: Vec<_> = est.liminf_points.iter().chain(&est.limsup_points).cloned().collect();
                points.sort_by(|a, b| a.x.cmp(&b.x));
                points.dedup_by(|a, b| a.x == b.x);
                return Ok((profile_csv(&points), true));
            }
            let lower = closed_form_lower_density(&s).ok();
            let upper = closed_form_upper_density(&s).ok();
            rendered(export::density(&s, *depth, &est, lower.as_ref(), upper.as_ref()))
        }
        Command::Gaps { set, cutoff, window: w, min_width, analytic, list } => {
            let s = spec(set)?;
            let (lo, hi) = window(w)?;
            if *list {
                json_only(fmt, "gaps --list")?;
                return rendered(export::window(&quotients_in_window(&s, *cutoff, &lo, &hi)?));
            }
            let gaps = if *analytic {
                certified_gaps_in_window(&s, &lo, &hi)?
            } else {
                gap_scan(&s, *cutoff, &lo, &hi, &rational("min-width", min_width)?)?
            };
            if fmt == Format::Csv {
                let mut out = String::from("lo,hi,kind,lo_decimal,hi_decimal\n");
                for g in &gaps {
                    let kind = if g.is_analytic() { "analytic" } else { "empirical" };
                    let v = export::gap(g);
                    out.push_str(&format!(
                        "{},{},{kind},{},{}\n",
                        fmt_rational(&g.lo),
                        fmt_rational(&g.hi),
                        v["lo_decimal"].as_str().unwrap_or_default(),
                        v["hi_decimal"].as_str().unwrap_or_default()
                    ));
                }
                return Ok((out, true));
            }
            rendered(export::gaps(&s, *cutoff, &lo, &hi, &gaps))
        }
        Command::Classify { set } => {
            json_only(fmt, "classify")?;
            let s = spec(set)?;
            rendered(export::classification(&s, &classify_fractional_density(&s)?))
        }
        Command::Approx { set, target, eps, exp_bound, escalate_to } => {
            json_only(fmt, "approx")?;
            let s = spec(set)?;
            let (xi, eps) = (rational("target", target)?, rational("eps", eps)?);
            let r = match &s {
                SetSpec::IntervalUnion { .. } => approximate_interval_union(&s, &xi, &eps)?,
                _ if is_two_three_powers(&s) => match escalate_to {
                    Some(max) => approximate_power_pair_doubling(&xi, &eps, *exp_bound, *max)?,
                    None => approximate_power_pair(&xi, &eps, *exp_bound)?,
                },
                other => {
                    return Err(Failure::Domain(format!(
                        "no approximation construction for {other}; use an interval union or the powers of 2 and 3"
                    )))
                }
            };
            rendered(export::approx(&r))
        }
        Command::Ap { set, upto, length, run, proof_cases } => {
            json_only(fmt, "ap")?;
            if *proof_cases {
                let r = verify_no_3ap_proof_cases(*upto)?;
                let ok = r.consistent();
                return Ok((export::render(&export::proof_report(&r)), ok));
            }
            let s = match set {
                Some(t) => spec(t)?,
                None => SetSpec::ap_free(),
            };
            if *run {
                return rendered(export::run(&s, *upto, longest_consecutive_run(&s, *upto)));
            }
            let found = find_progression(&s, *upto, *length)?;
            rendered(export::progression(&s, *upto, *length, found.as_ref()))
        }
        Command::Partition { partition: named, parts, upto } => {
            json_only(fmt, "partition")?;
            let p = partition(*named, parts)?;
            let ok = verify_partition(&p, *upto);
            Ok((export::render(&export::partition_check(&p, *upto, ok)), ok))
        }
        Command::Refute { partition: named, parts, alpha, beta, eps, search_bound } => {
            json_only(fmt, "refute")?;
            let p = partition(*named, parts)?;
            let (a, b, e) = (rational("alpha", alpha)?, rational("beta", beta)?, rational("eps", eps)?);
            let w = refute_two_partition(&p, &a, &b, &e, *search_bound)?;
            rendered(export::witness(&p, &w))
        }
        Command::Gem { number } => {
            json_only(fmt, "gem")?;
            let report = match number {
                1 => gems::gem_one(),
                2 => gems::gem_two(),
                3 => gems::gem_three(),
                4 => gems::gem_four(),
                n => return Err(Failure::Usage(format!("gem must be 1, 2, 3 or 4, got {n}"))),
            }?;
            Ok((report.render(), report.passed()))
        }
    }
}

fn is_two_three_powers(s: &SetSpec) -> bool {
    let ap = SetSpec::ap_free();
    if *s == ap {
        return true;
    }
    matches!(s, SetSpec::Union(l, r) if SetSpec::union((**r).clone(), (**l).clone()) == ap)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
