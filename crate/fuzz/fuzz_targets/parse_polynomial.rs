#![no_main]

use erq_core::{format_polynomial, parse_with};
use libfuzzer_sys::fuzz_target;

const NAMES: [&str; 3] = ["x", "y", "z"];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 512 {
        return;
    }
    let Ok(p) = parse_with(text, &NAMES) else { return };
    let printed = format_polynomial(&p, &NAMES);
    let again = parse_with(&printed, &NAMES).expect("printed form parses");
    assert_eq!(p, again);
});
