#![no_main]

use codegree_core::constructors::parse_spec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spec(text) {
        // The printed form must parse back to the same spec.
        let printed = spec.to_string();
        assert_eq!(parse_spec(&printed).as_ref(), Ok(&spec), "{printed}");
    }
});
