#![no_main]

use erq_core::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(r) = text.parse::<Rational>() else { return };
    assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
});
