#![no_main]

use erq_cli::decode_line;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    let Ok(entry) = decode_line(line) else { return };
    let again = serde_json::to_string(&entry).unwrap();
    assert_eq!(decode_line(&again).unwrap(), entry);
});
