use std::fmt::Write;

use serde_json::{json, Value};

use codegree_core::chartab::CharacterValue;
use codegree_core::gfp::{cyclotomic_polynomial, rem_monic};
use codegree_core::report::{Analysis, Report};

/// Character table as JSON: class data plus each character's values as
/// multiplicity vectors over powers of `E(e)`.
pub fn table_json(a: &Analysis) -> Value {
    let t = &a.table;
    let characters: Vec<Value> = t
        .characters()
        .iter()
        .zip(&a.codegrees)
        .map(|(c, cod)| {
            json!({
                "degree": c.degree,
                "kernel_order": c.kernel_order,
                "codegree": cod,
                "values": c.values.iter().map(|v| v.mult()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "name": a.name,
        "order": t.order(),
        "exponent": t.exponent(),
        "prime": t.prime(),
        "class_sizes": t.classes().sizes(),
        "class_rep_orders": t.classes().rep_order(),
        "characters": characters,
    })
}

pub fn table_text(a: &Analysis) -> String {
    let t = &a.table;
    let classes = t.classes();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend((0..classes.len()).map(|i| format!("{}{}", classes.rep_order()[i], class_letter(i))));
    rows.push(header);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(classes.sizes().iter().map(ToString::to_string));
    rows.push(sizes);
    let phi = cyclotomic_polynomial(t.exponent());
    for (i, c) in t.characters().iter().enumerate() {
        let mut row = vec![format!("X.{}", i + 1)];
        row.extend(c.values.iter().map(|v| reduced_value(v, &phi)));
        rows.push(row);
    }
    let ncols = rows[0].len();
    let widths: Vec<usize> = (0..ncols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();

    let mut out = String::new();
    let _ = writeln!(out, "{}: order {}, exponent {}, prime {}", a.name, t.order(), t.exponent(), t.prime());
    for row in &rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    let _ = writeln!(out, "degrees:       {:?}", t.degrees());
    let kernels: Vec<u64> = t.characters().iter().map(|c| c.kernel_order).collect();
    let _ = writeln!(out, "kernel orders: {kernels:?}");
    let _ = writeln!(out, "codegrees:     {:?}", a.codegrees);
    out
}

/// The value as a signed combination of `1, E(e), ..., E(e)^(φ(e)-1)`, so
/// rational values print as plain integers.
fn reduced_value(v: &CharacterValue, phi: &[i64]) -> String {
    let e = v.exponent();
    let poly: Vec<i64> = v.mult().iter().map(|&m| i64::from(m)).collect();
    let coeffs = rem_monic(&poly, phi);
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        let term = match (k, mag) {
            (0, _) => mag.to_string(),
            (1, 1) => format!("E({e})"),
            (1, _) => format!("{mag}*E({e})"),
            (_, 1) => format!("E({e})^{k}"),
            _ => format!("{mag}*E({e})^{k}"),
        };
        out.push_str(sign);
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// ATLAS-style class suffix: a, b, ..., z, aa, ab, ...
fn class_letter(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let profile: Vec<String> = r.codegree_profile.iter().map(|[d, m]| format!("{d}^{m}")).collect();
    let _ = writeln!(out, "{} (order {})", r.name, r.order);
    let _ = writeln!(out, "  degrees:   {:?}", r.degrees);
    let _ = writeln!(out, "  codegrees: {:?}", r.codegrees);
    let _ = writeln!(out, "  profile:   {}", profile.join(" "));
    let _ = writeln!(out, "  verdict:   {}", r.classification);
    let _ = writeln!(out, "  T_k:       {}", r.tk);
    let _ = writeln!(out, "  D'_n:      n = {}", r.dprime_n);
    let _ = writeln!(out, "  case:      {}", r.theorem_case);
    if let Some(p) = &r.properties {
        let _ = writeln!(out, "  property violations: {}", p.violations());
        for v in p.lemma_small_b.iter().chain(&p.lemma_small_c) {
            let _ = writeln!(out, "    {}", v.detail);
        }
    }
    if let Some(t) = &r.timing_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}ms")).collect();
        let _ = writeln!(out, "  timing:    {}", parts.join(" "));
    }
    out
}
