//! Regenerates the shipped catalog of built-in family instances.
//!
//! Usage: `cargo run -p codegree-core --example write_catalog -- catalog/groups.jsonl`

fn main() -> std::io::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "catalog/groups.jsonl".into());
    std::fs::write(path, codegree_core::suite::catalog_text())
}
