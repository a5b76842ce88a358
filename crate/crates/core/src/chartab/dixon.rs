//! The modular steps of the Dixon-Schneider method.

use super::{CharacterValue, ChartabError};
use crate::gfp::{eigen_split, inv_mod, is_prime, sqrt_mod, FpMatrix, Subspace, MAX_MODULUS};

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Checks that `p` can serve as the working prime for a group of the given
/// order and exponent.
pub fn check_dixon_prime(p: u64, order: u64, exponent: u64) -> Result<(), ChartabError> {
    let reason = if !is_prime(p) {
        "not prime".to_string()
    } else if p >= MAX_MODULUS {
        "not below 2^31".to_string()
    } else if !(p - 1).is_multiple_of(exponent) {
        format!("not congruent to 1 mod the exponent {exponent}")
    } else if p <= 2 * isqrt(order) {
        format!("not larger than 2*floor(sqrt({order}))")
    } else {
        return Ok(());
    };
    Err(ChartabError::BadPrime { p, reason })
}

/// Least prime `p ≡ 1 (mod exponent)` with `p > 2⌊√order⌋`.
pub fn dixon_prime(order: u64, exponent: u64) -> Result<u64, ChartabError> {
    assert!(order >= 1 && exponent >= 1);
    let bound = 2 * isqrt(order);
    let mut p = 1 + exponent;
    loop {
        if p >= MAX_MODULUS {
            return Err(ChartabError::BadPrime { p, reason: "search passed 2^31".into() });
        }
        if p > bound && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
}

/// Simultaneous eigenvectors of the class matrices over GF(p).
///
/// Starting from the whole class space, every block of dimension above one is
/// split by the eigenspaces of the next class matrix until all blocks are
/// lines. Classes are taken from the last index down; with classes sorted by
/// representative order this tries elements of large order first, which
/// separate characters best. Each returned vector is scaled so its identity-class
/// coordinate is 1; its `i`-th coordinate is then the central character value
/// `|C_i| χ(g_i) / χ(1)` mod `p`.
pub fn omega_eigenvectors(
    class_count: usize,
    p: u64,
    mut class_matrix: impl FnMut(usize) -> FpMatrix,
) -> Result<Vec<Vec<u64>>, ChartabError> {
    let mut blocks = vec![Subspace::full(p, class_count)];
    for i in (1..class_count).rev() {
        if blocks.iter().all(|b| b.dim() == 1) {
            break;
        }
        let m = class_matrix(i);
        let mut next = Vec::with_capacity(class_count);
        for block in blocks {
            if block.dim() == 1 {
                next.push(block);
            } else {
                next.extend(eigen_split(&block, &m)?.into_iter().map(|(_, s)| s));
            }
        }
        blocks = next;
    }
    if let Some(b) = blocks.iter().find(|b| b.dim() != 1) {
        return Err(ChartabError::SplitIncomplete { dim: b.dim() });
    }
    blocks
        .into_iter()
        .map(|b| {
            let v = b.basis()[0].clone();
            // RREF rows start with 1 at their pivot; the pivot must be class 0.
            if v[0] != 1 {
                return Err(ChartabError::Invariant("eigenvector vanishes at the identity class".into()));
            }
            Ok(v)
        })
        .collect()
}

/// Recovers `χ(1)` from `|G| / χ(1)² = Σ_i ω_i ω_{i'} / |C_i|`.
pub fn degree_from_omega(
    omega: &[u64],
    sizes: &[usize],
    inverse_class: &[usize],
    order: u64,
    p: u64,
) -> Result<u64, ChartabError> {
    let mut s = 0u64;
    for (i, &w) in omega.iter().enumerate() {
        let inv_size = inv_mod(sizes[i] as u64 % p, p).expect("p does not divide |G|");
        s = (s + w * omega[inverse_class[i]] % p * inv_size) % p;
    }
    let inv_s = inv_mod(s, p).ok_or(ChartabError::NotASquare { value: 0 })?;
    let d_sq = order % p * inv_s % p;
    let d = sqrt_mod(d_sq, p).ok_or(ChartabError::NotASquare { value: d_sq })?;
    if d == 0 || d * d > order {
        return Err(ChartabError::DegreeOutOfRange { degree: d, order });
    }
    Ok(d)
}

/// Lifts mod-`p` character values to eigenvalue multiplicities.
///
/// For class `i` whose representative has order `o`, the multiplicity of the
/// eigenvalue `ζ_o^j` is `o⁻¹ Σ_l χ̂(g^l) z^(-jl)` with `z` the image of `ζ_o`
/// in GF(p). It is stored at index `j·(e/o)` of a length-`e` vector.
/// `rep_powers[i][l]` is the class of `g_i^l` for `l < o`.
///
/// Classes are visited from the largest representative order down. Once a
/// class is lifted, every power class is filled in by sending eigenvalue
/// `ζ^a` to `ζ^(al)`, and the result is checked against its mod-`p` image.
pub fn lift_values(
    omega: &[u64],
    degree: u64,
    sizes: &[usize],
    rep_powers: &[Vec<usize>],
    p: u64,
    exponent: u64,
    zeta: u64,
) -> Result<Vec<CharacterValue>, ChartabError> {
    let chi_hat: Vec<u64> = omega
        .iter()
        .zip(sizes)
        .map(|(&w, &s)| w * (degree % p) % p * inv_mod(s as u64 % p, p).expect("p does not divide |G|") % p)
        .collect();
    let e = exponent as usize;
    let zeta_powers: Vec<u64> = std::iter::successors(Some(1u64), |z| Some(z * zeta % p)).take(e).collect();
    let mut lifted: Vec<Option<CharacterValue>> = vec![None; rep_powers.len()];
    let mut order_by_rep: Vec<usize> = (0..rep_powers.len()).collect();
    order_by_rep.sort_by_key(|&c| std::cmp::Reverse(rep_powers[c].len()));
    for class in order_by_rep {
        if lifted[class].is_some() {
            continue;
        }
        let powers = &rep_powers[class];
        let o = powers.len();
        let step = e / o;
        let o_inv = inv_mod(o as u64 % p, p).expect("o divides |G|");
        let mut mult = vec![0u32; e];
        let mut total = 0u64;
        for j in 0..o {
            let mut acc = 0u64;
            for (l, &c) in powers.iter().enumerate() {
                // z^(-jl) with z = ζ^step.
                let idx = (e - (j * l % o) * step) % e;
                acc = (acc + chi_hat[c] * zeta_powers[idx]) % p;
            }
            let m = acc * o_inv % p;
            if m > degree {
                return Err(ChartabError::LiftInconsistent {
                    class,
                    detail: format!("multiplicity {m} exceeds degree {degree}"),
                });
            }
            total += m;
            mult[j * step] = m as u32;
        }
        if total != degree {
            return Err(ChartabError::LiftInconsistent {
                class,
                detail: format!("multiplicities sum to {total}, not {degree}"),
            });
        }
        for (l, &c) in powers.iter().enumerate().skip(1) {
            if lifted[c].is_some() || c == class {
                continue;
            }
            let mut pushed = vec![0u32; e];
            for (a, &m) in mult.iter().enumerate() {
                pushed[a * l % e] += m;
            }
            let value = CharacterValue::new(pushed);
            if value.to_fp(&zeta_powers, p) != chi_hat[c] {
                return Err(ChartabError::LiftInconsistent {
                    class: c,
                    detail: format!("power {l} of class {class} disagrees with the modular value"),
                });
            }
            lifted[c] = Some(value);
        }
        lifted[class] = Some(CharacterValue::new(mult));
    }
    Ok(lifted.into_iter().map(|v| v.expect("every class is visited")).collect())
}
