#![no_main]

use codegree_core::catalog::{parse_catalog, CatalogEntry};
use libfuzzer_sys::fuzz_target;

const CAP: usize = 512;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for (_, entry) in parse_catalog(text) {
        let Ok(entry) = entry else { continue };
        let line = entry.to_line();
        assert_eq!(CatalogEntry::parse_line(&line).as_ref().ok(), Some(&entry), "{line}");
        if let Ok(group) = entry.to_group(CAP) {
            assert!(group.order() <= CAP);
        }
    }
});
