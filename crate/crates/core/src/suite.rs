//! The built-in theorem suite and the list of built-in family instances.

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, Expected};
use crate::codegree::{Classification, TheoremCase};
use crate::constructors::{parse_spec, ExtraspecialSign, GroupSpec};
use crate::gfp::{is_prime, prime_power};
use crate::permgrp::DEFAULT_CAP;

/// One expectation of the theorem suite, e.g.
/// `{"spec":"sym:4","verdict":"TkPrime","k":2,"d0":8,"case":"B1"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCase {
    pub spec: String,
    #[serde(flatten)]
    pub expected: Expected,
}

impl SuiteCase {
    fn new(spec: &str, classification: Classification, case: TheoremCase) -> Self {
        SuiteCase { spec: spec.to_string(), expected: Expected { classification, case } }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("suite cases serialize")
    }
}

fn tk(spec: &str, k: u64, d0: u64, case: TheoremCase) -> SuiteCase {
    SuiteCase::new(spec, Classification::TkPrime { k, d0 }, case)
}

fn not_tk(spec: &str, d1: u64, d2: u64) -> SuiteCase {
    SuiteCase::new(spec, Classification::NotTkPrime { witness: (d1, d2) }, TheoremCase::NotTkPrimeConsistent)
}

/// Every group the classification names, with its expected verdict and
/// clause, followed by the negative controls.
pub fn builtin_suite() -> Vec<SuiteCase> {
    use TheoremCase::*;
    let mut out = vec![
        tk("psl2:5", 2, 20, APsl2_5),
        tk("psl2:7", 2, 56, APsl2_7),
        tk("cyclic:4", 2, 4, B1),
        tk("sym:4", 2, 8, B1),
        tk("frobenius:5^1:4", 2, 4, B1),
        tk("dicyclic:3", 2, 4, B1),
        tk("direct:(cyclic:2)*(sym:3)", 3, 2, B2),
        tk("dihedral:9", 3, 9, B2),
        tk("c3c3q8", 3, 2, B2),
    ];
    for (p, beta) in [(2u64, 1u32), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
        out.push(tk(&format!("elemab:{p}^{beta}"), p.pow(beta) - 1, p, B3ElemAb));
    }
    for k in [3u32, 5] {
        let n = (k - 1) / 2;
        for sign in ['+', '-'] {
            out.push(tk(&format!("extraspecial:2^{k}:{sign}"), (1 << (2 * n)) - 1, 2, B3Extraspecial2));
        }
    }
    for beta in [2u32, 3, 5] {
        let q = 1u64 << beta;
        out.push(tk(&format!("frobenius:2^{beta}:{}", q - 1), q - 2, q - 1, B4));
    }
    for (p, beta) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (5, 2)] {
        out.push(tk(&format!("frobenius:{p}^{beta}:2"), (p.pow(beta) - 1) / 2, p, B5));
    }
    out.extend([
        not_tk("cyclic:6", 3, 6),
        not_tk("cyclic:9", 3, 9),
        not_tk("dihedral:10", 5, 10),
        not_tk("abelian:2x4", 2, 4),
    ]);
    out
}

/// Parses a suite file: one [`SuiteCase`] per line, blank lines and `#`
/// comments skipped. Errors carry the 1-based line number.
pub fn parse_suite(text: &str) -> Result<Vec<SuiteCase>, (usize, String)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            let case: SuiteCase = serde_json::from_str(l).map_err(|e| (i + 1, e.to_string()))?;
            parse_spec(&case.spec).map_err(|e| (i + 1, e.to_string()))?;
            Ok(case)
        })
        .collect()
}

/// Invariant factor lists `n1 | n2 | ... | nr` with `r >= 2`, `n1 >= 2` and
/// product at most `max_order`, skipping elementary abelian groups.
fn abelian_invariants(max_order: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, product: u64, max_order: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().expect("nonempty prefix");
        let mut next = last;
        while product * next <= max_order {
            prefix.push(next);
            extend(prefix, product * next, max_order, out);
            prefix.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    for first in 2..=max_order {
        extend(&mut vec![first], first, max_order, &mut out);
    }
    out.retain(|fs| !(is_prime(fs[0]) && fs.iter().all(|&f| f == fs[0])));
    out.sort_by_key(|fs| (fs.iter().product::<u64>(), fs.clone()));
    out
}

/// Every built-in family instance of order at most `max_order` (trivial group
/// excluded), in a fixed order.
pub fn builtin_family_specs(max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    out.extend((2..=max_order).map(GroupSpec::Cyclic));
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut beta = 2u32;
        while p.pow(beta) <= max_order {
            out.push(GroupSpec::ElementaryAbelian { p, beta });
            beta += 1;
        }
    }
    out.extend(abelian_invariants(max_order).into_iter().map(GroupSpec::Abelian));
    out.extend((2..=max_order / 2).map(GroupSpec::Dihedral));
    out.extend((2..=max_order / 4).map(GroupSpec::Dicyclic));
    out.extend((3..=5).filter(|&n| (1..=n).product::<u64>() <= max_order).map(GroupSpec::Symmetric));
    out.extend((4..=5).filter(|&n| (1..=n).product::<u64>() / 2 <= max_order).map(GroupSpec::Alternating));
    for q in 3..=max_order {
        let Some((p, beta)) = prime_power(q) else { continue };
        for m in (2..q).filter(|m| (q - 1) % m == 0 && q * m <= max_order) {
            out.push(GroupSpec::Frobenius { p, beta, m });
        }
    }
    for n in 1..=3u32 {
        if 1u64 << (2 * n + 1) <= max_order {
            for sign in [ExtraspecialSign::Plus, ExtraspecialSign::Minus] {
                out.push(GroupSpec::Extraspecial { n, sign });
            }
        }
    }
    out.extend([5u64, 7, 11, 13].into_iter().filter(|&q| q * (q * q - 1) / 2 <= max_order).map(GroupSpec::Psl2));
    if max_order >= 72 {
        out.push(GroupSpec::C3c3Q8);
    }
    let directs = [
        ("cyclic:2", "sym:3"),
        ("cyclic:3", "sym:3"),
        ("sym:3", "sym:3"),
        ("cyclic:2", "alt:4"),
        ("cyclic:2", "sym:4"),
        ("cyclic:2", "dihedral:4"),
        ("cyclic:2", "alt:5"),
        ("cyclic:2", "c3c3q8"),
    ];
    for (a, b) in directs {
        let spec = GroupSpec::Direct(
            Box::new(parse_spec(a).expect("fixed spec")),
            Box::new(parse_spec(b).expect("fixed spec")),
        );
        if spec.expected_order().is_some_and(|o| o <= max_order as u128) {
            out.push(spec);
        }
    }
    out
}

/// Order bound of the shipped catalog.
pub const CATALOG_MAX_ORDER: u64 = 200;

/// The shipped catalog: every built-in family instance up to
/// [`CATALOG_MAX_ORDER`], with an `expected` block for suite members.
pub fn catalog_text() -> String {
    let suite = builtin_suite();
    let mut out = format!(
        "# Built-in family instances of order at most {CATALOG_MAX_ORDER}.\n\
         # Regenerate with: cargo run -p codegree-core --example write_catalog\n"
    );
    for spec in builtin_family_specs(CATALOG_MAX_ORDER) {
        let group = spec.build(DEFAULT_CAP).expect("built-in families construct");
        let mut entry = CatalogEntry::from_group(spec.to_string(), &group);
        entry.expected =
            suite.iter().find(|c| parse_spec(&c.spec).ok().as_ref() == Some(&spec)).map(|c| c.expected.clone());
        out.push_str(&entry.to_line());
        out.push('\n');
    }
    out
}
