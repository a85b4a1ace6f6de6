//! Partitions of ℕ and the refutation of two-part gap claims.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive};

use crate::numeric::{floor_rat, fmt_rational, from_natural, nat, Natural, Rational};
use crate::setspec::{Part, SetSpec};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionName {
    ThreeWayBase5,
    FactorialBlocks,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub name: PartitionName,
    pub parts: Vec<SetSpec>,
}

impl PartitionSpec {
    /// Caller-supplied parts; disjointness and coverage are checked by [`verify_partition`].
    pub fn custom(parts: Vec<SetSpec>) -> Result<Self, Error> {
        if !(2..=3).contains(&parts.len()) {
            return Err(Error::InvalidArgument(format!("a partition needs 2 or 3 parts, got {}", parts.len())));
        }
        for p in &parts {
            p.validate()?;
        }
        Ok(PartitionSpec { name: PartitionName::Custom, parts })
    }

    /// Index of the first part containing `n`.
    pub fn part_of(&self, n: u64) -> Option<usize> {
        self.parts.iter().position(|p| p.contains_u64(n))
    }
}

impl fmt::Display for PartitionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionName::ThreeWayBase5 => "three-way-base5",
            PartitionName::FactorialBlocks => "factorial-blocks",
            PartitionName::Custom => "custom",
        })
    }
}

/// Leading base-5 digit 1, digit 2, and digits 3 or 4.
pub fn build_three_way() -> PartitionSpec {
    let ld = |d: &[u64]| SetSpec::LeadingDigit { base: 5, digits: d.to_vec() };
    PartitionSpec { name: PartitionName::ThreeWayBase5, parts: vec![ld(&[1]), ld(&[2]), ld(&[3, 4])] }
}

/// Blocks of `1!, 2!, 3!, …` consecutive integers, alternating between the parts.
pub fn build_factorial() -> PartitionSpec {
    PartitionSpec {
        name: PartitionName::FactorialBlocks,
        parts: vec![SetSpec::FactorialBlocks(Part::A), SetSpec::FactorialBlocks(Part::B)],
    }
}

/// Whether every `n ≤ upto` lies in exactly one part.
pub fn verify_partition(p: &PartitionSpec, upto: u64) -> bool {
    let len = usize::try_from(upto).expect("upto fits in memory") + 1;
    let mut hits = vec![0u8; len];
    for part in &p.parts {
        for n in part.enumerate_upto(upto) {
            hits[n as usize] = hits[n as usize].saturating_add(1);
        }
    }
    hits[1..].iter().all(|&h| h == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationWitness {
    pub part_index: usize,
    pub numerator: Natural,
    pub denominator: Natural,
    pub quotient: Rational,
    /// The claimed gap `(center - epsilon, center + epsilon)` this quotient lands in.
    pub center: Rational,
    pub epsilon: Rational,
    pub branch: String,
    /// `n0`, `n`, `s`, `t` in the order computed.
    pub trace: Vec<(String, Natural)>,
}

impl RefutationWitness {
    pub fn verify(&self, p: &PartitionSpec) -> Result<bool, Error> {
        let Some(part) = p.parts.get(self.part_index) else {
            return Ok(false);
        };
        let q = from_natural(&self.numerator) / from_natural(&self.denominator);
        Ok(q == self.quotient
            && (&q - &self.center).abs() < self.epsilon
            && part.contains(&self.numerator)?
            && part.contains(&self.denominator)?)
    }
}

/// Refutes the claim that part 0 has no quotient in `(α-ε, α+ε)` while
/// part 1 has none in `(β-ε, β+ε)`.
///
/// Takes the least `n₀` with `(1 + α + β + 2αβ)/n₀ < ε` and the least
/// `n > αβ(n₀+1)` at which membership switches parts between `n` and
/// `n+1`. With `s = ⌊n/(αβ)⌋ - 1` one of `t/s`, `(n+1)/t`, `n/t` (where
/// `t = ⌊αs⌋` or `⌊βs⌋`) is a same-part quotient inside a claimed gap.
pub fn refute_two_partition(
    p: &PartitionSpec,
    alpha: &Rational,
    beta: &Rational,
    eps: &Rational,
    search_bound: u64,
) -> Result<RefutationWitness, Error> {
    if p.parts.len() != 2 {
        return Err(Error::InvalidArgument(format!("refutation needs a 2-part partition, got {}", p.parts.len())));
    }
    let one = Rational::one();
    if alpha <= &one || beta <= &one {
        return Err(Error::InvalidArgument("alpha and beta must exceed 1".into()));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    let ab = alpha * beta;
    let k = &one + alpha + beta + Rational::from_integer(2.into()) * &ab;
    let n0 = floor_rat(&(&k / eps))? + 1u32;
    let start = floor_rat(&(&ab * (from_natural(&n0) + &one)))? + 1u32;
    let start = start.to_u64().ok_or_else(|| Error::TooLarge("scan start exceeds u64".into()))?;
    let ok = |side: usize, n: u64| p.parts[side].contains_u64(n);
    let centers = [alpha, beta];
    let mut n = start;
    while n < search_bound {
        // x is the part holding n, y the part holding n + 1
        let orient = if ok(0, n) && ok(1, n + 1) {
            Some((0usize, 1usize))
        } else if ok(1, n) && ok(0, n + 1) {
            Some((1, 0))
        } else {
            None
        };
        if let Some((x, y)) = orient {
            let (cx, cy) = (centers[x], centers[y]);
            let s = floor_rat(&(from_natural(&nat(n)) / &ab))?.to_u64().unwrap_or(0).saturating_sub(1);
            if s >= 1 {
                let (part, num, den, center, t, branch) = if ok(x, s) {
                    let t = floor_rat(&(cx * from_natural(&nat(s))))?.to_u64().unwrap_or(0);
                    if ok(x, t) {
                        (x, t, s, cx, t, "s, t with n: t/s")
                    } else {
                        (y, n + 1, t, cy, t, "s with n, t with n+1: (n+1)/t")
                    }
                } else {
                    let t = floor_rat(&(cy * from_natural(&nat(s))))?.to_u64().unwrap_or(0);
                    if ok(y, t) {
                        (y, t, s, cy, t, "s, t with n+1: t/s")
                    } else {
                        (x, n, t, cx, t, "s with n+1, t with n: n/t")
                    }
                };
                let quotient = if den == 0 { None } else { Some(Rational::new(num.into(), den.into())) };
                if let Some(quotient) = quotient {
                    let w = RefutationWitness {
                        part_index: part,
                        numerator: nat(num),
                        denominator: nat(den),
                        quotient,
                        center: center.clone(),
                        epsilon: eps.clone(),
                        branch: format!("{branch} (n in part {x})"),
                        trace: vec![
                            ("n0".into(), n0.clone()),
                            ("n".into(), nat(n)),
                            ("s".into(), nat(s)),
                            ("t".into(), nat(t)),
                        ],
                    };
                    if w.verify(p)? {
                        return Ok(w);
                    }
                }
            }
        }
        n += 1;
    }
    Err(Error::BoundExhausted {
        bound: search_bound,
        hint: format!(
            "no refuting pair for alpha={} beta={} below the bound; raise the search bound",
            fmt_rational(alpha),
            fmt_rational(beta)
        ),
    })
}
