#![no_main]

use libfuzzer_sys::fuzz_target;
use ratioset::lang::parse_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spec(text) {
        // printing is the inverse of parsing
        let printed = spec.to_string();
        assert_eq!(parse_spec(&printed).as_ref(), Ok(&spec), "{printed}");
        let _ = spec.contains_u64(1000);
    }
});
