//! Replays the checked-in fuzz corpus through the same round-trip properties.

use std::fs;
use std::path::Path;

use ratioset::lang::parse_spec;
use ratioset::numeric::{fmt_rational, parse_rational};

fn seeds(target: &str) -> Vec<String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    out
}

#[test]
fn spec_seeds_round_trip() {
    let all = seeds("parse_spec");
    assert!(!all.is_empty());
    for text in all {
        let spec = parse_spec(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(parse_spec(&spec.to_string()), Ok(spec), "{text}");
    }
}

#[test]
fn rational_seeds_round_trip() {
    let mut parsed = 0;
    for text in seeds("parse_rational") {
        if let Ok(x) = parse_rational(&text) {
            assert_eq!(parse_rational(&fmt_rational(&x)), Ok(x));
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}
