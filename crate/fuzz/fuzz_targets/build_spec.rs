#![no_main]

use codegree_core::chartab::TableOptions;
use codegree_core::constructors::parse_spec;
use codegree_core::report::analyze;
use libfuzzer_sys::fuzz_target;

// Small enough that every accepted input runs the whole pipeline quickly.
const CAP: usize = 64;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = parse_spec(text) else { return };
    if spec.reads_files() {
        return;
    }
    let Ok(group) = spec.build(CAP) else { return };
    let analysis = analyze(text, group, &TableOptions::default()).expect("built groups have tables");
    let sum: u64 = analysis.table.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sum, analysis.table.order());
});
