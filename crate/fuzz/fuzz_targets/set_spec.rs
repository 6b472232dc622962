#![no_main]

use erq_core::harness::{gen_set, SetSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1024 {
        return;
    }
    let Ok(spec) = serde_json::from_slice::<SetSpec>(data) else { return };
    let json = serde_json::to_string(&spec).unwrap();
    assert_eq!(serde_json::from_str::<SetSpec>(&json).unwrap(), spec);
    if let Ok(values) = gen_set(&spec) {
        assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
});
