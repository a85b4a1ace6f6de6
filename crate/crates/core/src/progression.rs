//! Arithmetic progressions and runs of consecutive members.

use std::collections::HashSet;

use crate::setspec::SetSpec;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub first: u64,
    pub difference: u64,
    pub length: u64,
}

impl Progression {
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.length).map(move |i| self.first + i * self.difference)
    }
}

/// First progression of `length` members in `[1, upto]`, ordered by first
/// term and then by difference.
pub fn find_progression(spec: &SetSpec, upto: u64, length: u64) -> Result<Option<Progression>, Error> {
    if length < 3 {
        return Err(Error::InvalidArgument(format!("progression length must be >= 3, got {length}")));
    }
    if upto < length {
        return Err(Error::InvalidArgument(format!("upto {upto} is below the length {length}")));
    }
    let elems = spec.enumerate_upto(upto);
    let members: HashSet<u64> = elems.iter().copied().collect();
    for (i, &x) in elems.iter().enumerate() {
        for &y in &elems[i + 1..] {
            let d = y - x;
            // the last term must fit below upto
            if (length - 1).checked_mul(d).and_then(|s| s.checked_add(x)).is_none_or(|last| last > upto) {
                break;
            }
            if (2..length).all(|t| members.contains(&(x + t * d))) {
                return Ok(Some(Progression { first: x, difference: d, length }));
            }
        }
    }
    Ok(None)
}

/// Longest run of consecutive members in `[1, upto]` as `(start, length)`,
/// earliest on ties; `None` for an empty prefix.
pub fn longest_consecutive_run(spec: &SetSpec, upto: u64) -> Option<(u64, u64)> {
    let elems = spec.enumerate_upto(upto);
    let mut best: Option<(u64, u64)> = None;
    let mut i = 0;
    while i < elems.len() {
        let mut j = i;
        while j + 1 < elems.len() && elems[j + 1] == elems[j] + 1 {
            j += 1;
        }
        let len = (j - i + 1) as u64;
        if best.is_none_or(|(_, l)| len > l) {
            best = Some((elems[i], len));
        }
        i = j + 1;
    }
    best
}

/// Tally of the 3-AP exclusion argument for `{2^j : j ≥ 2} ∪ {3^k : k ≥ 2}`.
///
/// Every pair `x < z` of members is a candidate for the outer terms of a
/// progression. A candidate falls to exactly one argument: mixed parity
/// (no integer midpoint), the powers-of-two factorization, or the mod-3
/// contradiction for powers of three. Independently, each midpoint is
/// tested for membership directly.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ApProofReport {
    pub prefix_bound: u64,
    pub members: Vec<u64>,
    pub candidates: u64,
    pub two_led: u64,
    pub three_led: u64,
    pub parity_eliminated: u64,
    pub power_of_two_eliminated: u64,
    pub mod_three_eliminated: u64,
    /// Candidates whose midpoint is a member, found by direct lookup.
    pub progressions_found: u64,
    /// Candidates whose argument failed to apply as the proof describes.
    pub argument_failures: u64,
}

impl ApProofReport {
    pub fn consistent(&self) -> bool {
        self.progressions_found == 0
            && self.argument_failures == 0
            && self.parity_eliminated + self.power_of_two_eliminated + self.mod_three_eliminated == self.candidates
    }
}

fn power_exponent(mut n: u64, base: u64) -> Option<u32> {
    let mut e = 0;
    while n > 1 {
        if !n.is_multiple_of(base) {
            return None;
        }
        n /= base;
        e += 1;
    }
    (n == 1).then_some(e)
}

/// Runs the exclusion argument over all member pairs up to `prefix_bound`.
pub fn verify_no_3ap_proof_cases(prefix_bound: u64) -> Result<ApProofReport, Error> {
    if prefix_bound < 16 {
        return Err(Error::InvalidArgument(format!("prefix bound must be >= 16, got {prefix_bound}")));
    }
    let spec = SetSpec::ap_free();
    let members = spec.enumerate_upto(prefix_bound);
    let lookup: HashSet<u64> = members.iter().copied().collect();
    let mut r = ApProofReport { prefix_bound, members: members.clone(), ..Default::default() };
    for (i, &x) in members.iter().enumerate() {
        for &z in &members[i + 1..] {
            r.candidates += 1;
            let x_two = power_exponent(x, 2).filter(|&e| e >= 2);
            if x_two.is_some() {
                r.two_led += 1;
            } else {
                r.three_led += 1;
            }
            if (x + z) % 2 == 0 && lookup.contains(&((x + z) / 2)) {
                r.progressions_found += 1;
            }
            if (x + z) % 2 == 1 {
                r.parity_eliminated += 1;
                continue;
            }
            let m = (x + z) / 2;
            let ok = if let Some(j) = x_two {
                // z = 2^k, so b = 2^{k-1} - 2^{j-1} is even and m = 2^{j-1}(2^{k-j} + 1)
                let b = (z - x) / 2;
                let odd = m >> (j - 1);
                r.power_of_two_eliminated += 1;
                b % 2 == 0 && odd % 2 == 1 && odd > 1 && m % 2 == 0
            } else {
                // x = 3^j, z = 3^k: m = 3^j + 3^j(3^{k-j} - 1)/2, and 2·m/3^j = 3^{k-j} + 1 ≡ 1 (mod 3)
                let j = power_exponent(x, 3).unwrap_or(0);
                let unit = 3u64.pow(j);
                r.mod_three_eliminated += 1;
                m % unit == 0 && m % 3 == 0 && (2 * m / unit) % 3 == 1 && m / unit > 1
            };
            if !ok {
                r.argument_failures += 1;
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    #[test]
    fn progression_examples() {
        assert_eq!(find_progression(&SetSpec::ap_free(), 1_000_000, 3).unwrap(), None);
        let iu = SetSpec::interval_union(int(2), int(10)).unwrap();
        assert_eq!(
            find_progression(&iu, 200, 50).unwrap(),
            Some(Progression { first: 100, difference: 1, length: 50 })
        );
        let e = SetSpec::explicit([4, 8, 12]).unwrap();
        assert_eq!(find_progression(&e, 12, 3).unwrap(), Some(Progression { first: 4, difference: 4, length: 3 }));
        assert!(find_progression(&e, 12, 2).is_err());
        assert!(find_progression(&e, 2, 3).is_err());
    }

    #[test]
    fn progression_matches_triple_oracle() {
        let specs = [
            SetSpec::powers(2, 0).unwrap(),
            SetSpec::explicit([1, 2, 4, 5, 10, 11, 13, 14]).unwrap(),
            SetSpec::leading_digit(5, [3, 4]).unwrap(),
            SetSpec::union(SetSpec::powers(2, 1).unwrap(), SetSpec::powers(3, 1).unwrap()),
        ];
        for spec in &specs {
            let e = spec.enumerate_upto(300);
            let mut oracle = None;
            'outer: for &a in &e {
                for &b in &e {
                    for &c in &e {
                        if a < b && b < c && b - a == c - b {
                            oracle = Some(Progression { first: a, difference: b - a, length: 3 });
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(find_progression(spec, 300, 3).unwrap(), oracle, "{spec}");
        }
    }

    #[test]
    fn shorter_prefix_of_a_witness() {
        let iu = SetSpec::interval_union(int(3), int(4)).unwrap();
        for len in 4..20 {
            let long = find_progression(&iu, 5000, len).unwrap().unwrap();
            assert!(find_progression(&iu, 5000, len - 1).unwrap().is_some());
            assert!(long.terms().all(|t| iu.contains_u64(t)));
        }
    }

    #[test]
    fn run_examples() {
        let iu = SetSpec::interval_union(int(2), int(10)).unwrap();
        assert_eq!(longest_consecutive_run(&iu, 10_000), Some((1000, 1000)));
        assert_eq!(longest_consecutive_run(&SetSpec::powers(2, 1).unwrap(), 100), Some((2, 1)));
        assert_eq!(longest_consecutive_run(&SetSpec::explicit([5, 6, 7, 9]).unwrap(), 9), Some((5, 3)));
        assert_eq!(longest_consecutive_run(&SetSpec::explicit([5]).unwrap(), 4), None);
    }

    #[test]
    fn runs_grow_with_blocks() {
        for (a, b) in [(2u64, 3u64), (2, 5), (3, 7), (4, 10)] {
            let spec = SetSpec::interval_union(int(a as i64), int(b as i64)).unwrap();
            let upto = 200_000;
            let (_, len) = longest_consecutive_run(&spec, upto).unwrap();
            let mut k = 0;
            while a * b.pow(k) <= upto {
                assert!(len >= (a - 1) * b.pow(k));
                k += 1;
            }
        }
    }

    #[test]
    fn proof_case_tallies() {
        let r = verify_no_3ap_proof_cases(81).unwrap();
        assert_eq!(r.members, vec![4, 8, 9, 16, 27, 32, 64, 81]);
        assert_eq!(r.candidates, 28);
        assert_eq!(r.parity_eliminated, 15);
        assert_eq!(r.power_of_two_eliminated, 10);
        assert_eq!(r.mod_three_eliminated, 3);
        assert!(r.consistent());

        let r = verify_no_3ap_proof_cases(1000).unwrap();
        assert!(r.consistent());
        // all power-of-two-led candidates fall to parity or the factorization argument
        assert_eq!(r.power_of_two_eliminated, 8 * 7 / 2);
        let r = verify_no_3ap_proof_cases(1_000_000).unwrap();
        assert!(r.consistent());
        assert_eq!(r.progressions_found, 0);
        assert!(verify_no_3ap_proof_cases(15).is_err());
    }
}
