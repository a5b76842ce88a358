use super::CharacterTable;
use crate::gfp::{cyclotomic_polynomial, rem_monic};

/// Failures found by [`verify_orthogonality`], as index pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrthogonalityReport {
    /// Character pairs violating row orthogonality mod p.
    pub first_modp: Vec<(usize, usize)>,
    /// Class pairs violating column orthogonality mod p.
    pub second_modp: Vec<(usize, usize)>,
    /// Character pairs violating row orthogonality in Z[ζ_e].
    pub exact: Vec<(usize, usize)>,
}

impl OrthogonalityReport {
    pub fn is_ok(&self) -> bool {
        self.first_modp.is_empty() && self.second_modp.is_empty() && self.exact.is_empty()
    }
}

/// `Σ_i |C_i| χ_a(g_i) conj(χ_b(g_i))` reduced modulo `Φ_e`, as coefficients
/// of `1, ζ, ..., ζ^(φ(e)-1)`.
pub fn row_inner_product(table: &CharacterTable, a: usize, b: usize) -> Vec<i64> {
    let phi = cyclotomic_polynomial(table.exponent());
    let terms = sparse_terms(table);
    row_inner_product_with(table, &terms, a, b, &phi)
}

type SparseRow = Vec<Vec<(usize, u32)>>;

fn sparse_terms(table: &CharacterTable) -> Vec<SparseRow> {
    table.characters().iter().map(|c| c.values.iter().map(|v| v.terms().collect()).collect()).collect()
}

fn row_inner_product_with(table: &CharacterTable, terms: &[SparseRow], a: usize, b: usize, phi: &[i64]) -> Vec<i64> {
    let e = table.exponent() as usize;
    let sizes = table.classes().sizes();
    let mut acc = vec![0i64; e];
    for (i, &size) in sizes.iter().enumerate() {
        for &(k, m) in &terms[a][i] {
            for &(l, n) in &terms[b][i] {
                acc[(k + e - l) % e] += size as i64 * m as i64 * n as i64;
            }
        }
    }
    rem_monic(&acc, phi)
}

/// Checks both orthogonality relations mod p and row orthogonality exactly.
pub fn verify_orthogonality(table: &CharacterTable) -> OrthogonalityReport {
    let p = table.prime();
    let order = table.order();
    let classes = table.classes();
    let sizes = classes.sizes();
    let inv = classes.inverse_class();
    let zeta_powers = table.zeta_powers();
    let chars = table.characters();
    let k = chars.len();
    let hat: Vec<Vec<u64>> =
        chars.iter().map(|c| c.values.iter().map(|v| v.to_fp(&zeta_powers, p)).collect()).collect();

    let mut report = OrthogonalityReport::default();
    // Both relations are symmetric up to complex conjugation, so only pairs
    // with a <= b are evaluated.
    for a in 0..k {
        for b in a..k {
            let s = (0..k).fold(0u64, |acc, i| (acc + sizes[i] as u64 % p * hat[a][i] % p * hat[b][inv[i]]) % p);
            let expected = if a == b { order % p } else { 0 };
            if s != expected {
                report.first_modp.push((a, b));
            }
        }
    }
    for i in 0..k {
        for j in i..k {
            let s = (0..k).fold(0u64, |acc, c| (acc + hat[c][i] * hat[c][inv[j]]) % p);
            let expected = if i == j { (order / sizes[i] as u64) % p } else { 0 };
            if s != expected {
                report.second_modp.push((i, j));
            }
        }
    }
    let phi = cyclotomic_polynomial(table.exponent());
    let terms = sparse_terms(table);
    for a in 0..k {
        for b in a..k {
            let poly = row_inner_product_with(table, &terms, a, b, &phi);
            let constant = if a == b { order as i64 } else { 0 };
            if poly[0] != constant || poly[1..].iter().any(|&c| c != 0) {
                report.exact.push((a, b));
            }
        }
    }
    report
}
