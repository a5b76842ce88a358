//! Permutation realisations of every group family the classification names,
//! plus the negative controls used alongside them.
//!
//! Every constructor takes an order cap and refuses to build anything whose
//! known order exceeds it, before allocating.

mod field;
mod spec;
mod table;

pub use field::FieldGF;
pub use spec::{parse_spec, ExtraspecialSign, GroupSpec, SpecError};
pub use table::{central_product, dicyclic_table, dihedral_table, regular_representation, TableGroup};

use thiserror::Error;

use crate::gfp::{inv_mod, is_prime};
use crate::permgrp::{GroupElements, PermError, Permutation};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the cap of {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("invalid multiplication table: {0}")]
    Table(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("cannot load permutation group from {path}: {reason}")]
    PermFile { path: String, reason: String },
}

impl ConstructError {
    /// True for both the up-front order check and a closure that overflowed.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, ConstructError::CapExceeded { .. } | ConstructError::Perm(PermError::ClosureExceedsCap { .. }))
    }
}

fn check_cap(order: u128, cap: usize) -> Result<(), ConstructError> {
    if order > cap as u128 {
        Err(ConstructError::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::InvalidParameter(msg.into()))
}

/// Direct product of cyclic groups acting on disjoint blocks of points.
fn cycles_on_blocks(factors: &[u64], cap: usize) -> Result<GroupElements, ConstructError> {
    let order = factors.iter().fold(1u128, |acc, &f| acc.saturating_mul(f as u128));
    check_cap(order, cap)?;
    let degree: usize = factors.iter().map(|&f| f as usize).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0;
    for &f in factors {
        let f = f as usize;
        if f > 1 {
            let cycle: Vec<usize> = (offset..offset + f).collect();
            gens.push(Permutation::from_cycles(degree, &[cycle])?);
        }
        offset += f;
    }
    Ok(GroupElements::generate(degree, &gens, cap)?)
}

/// Cyclic group of order `n` generated by an `n`-cycle.
pub fn cyclic(n: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("cyclic group order must be positive");
    }
    cycles_on_blocks(&[n], cap)
}

/// `C_p^β` as `β` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, beta: u32, cap: usize) -> Result<GroupElements, ConstructError> {
    if !is_prime(p) || beta == 0 {
        return invalid(format!("elementary abelian {p}^{beta} needs p prime and β ≥ 1"));
    }
    check_cap((p as u128).saturating_pow(beta), cap)?;
    cycles_on_blocks(&vec![p; beta as usize], cap)
}

/// Direct product of cyclic groups with the given orders.
pub fn abelian(factors: &[u64], cap: usize) -> Result<GroupElements, ConstructError> {
    if factors.is_empty() || factors.contains(&0) {
        return invalid("abelian factors must be positive");
    }
    cycles_on_blocks(factors, cap)
}

/// Dihedral group of order `2n`, on `n` points for `n ≥ 3` and via the
/// regular representation of its table otherwise.
pub fn dihedral(n: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("dihedral parameter must be positive");
    }
    check_cap(2 * n as u128, cap)?;
    let n = n as usize;
    if n < 3 {
        return regular_representation(&dihedral_table(n), cap);
    }
    let rot = Permutation::new((0..n).map(|x| (x + 1) % n).collect())?;
    let refl = Permutation::new((0..n).map(|x| (n - x) % n).collect())?;
    Ok(GroupElements::generate(n, &[rot, refl], cap)?)
}

/// Dicyclic group of order `4n`.
pub fn dicyclic(n: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("dicyclic parameter must be positive");
    }
    check_cap(4 * n as u128, cap)?;
    regular_representation(&dicyclic_table(n as usize), cap)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

pub fn symmetric(n: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("symmetric degree must be positive");
    }
    check_cap(factorial(n), cap)?;
    let n = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
    }
    Ok(GroupElements::generate(n, &gens, cap)?)
}

pub fn alternating(n: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("alternating degree must be positive");
    }
    check_cap((factorial(n) / 2).max(1), cap)?;
    let n = n as usize;
    let gens = (2..n).map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]])).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupElements::generate(n, &gens, cap)?)
}

/// The affine group `{x ↦ g^j x + c}` on GF(p^β) with `g` of order `m`.
///
/// Generated by the β basis translations followed by multiplication by the
/// unique order-`m` power of the field's stored generator.
pub fn frobenius_field(p: u64, beta: u32, m: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if !is_prime(p) || beta == 0 {
        return invalid(format!("frobenius {p}^{beta}: p must be prime and β ≥ 1"));
    }
    let q = (p as u128).saturating_pow(beta);
    if m < 2 || !(q - 1).is_multiple_of(m as u128) {
        return invalid(format!("frobenius {p}^{beta}:{m}: m must be ≥ 2 and divide {}", q - 1));
    }
    check_cap(q.saturating_mul(m as u128), cap)?;
    let field = FieldGF::new(p, beta, cap)?;
    let q = field.size();
    let mut gens = Vec::new();
    for i in 0..beta {
        let basis = p.pow(i) as usize;
        gens.push(Permutation::new((0..q).map(|x| field.add(x, basis)).collect())?);
    }
    let mult = field.pow(field.generator(), (q as u64 - 1) / m);
    gens.push(Permutation::new((0..q).map(|x| field.mul(mult, x)).collect())?);
    Ok(GroupElements::generate(q, &gens, cap)?)
}

/// Generators of the quaternion subgroup of GL(2, 3) acting on GF(3)².
///
/// Row-major `[[a, b], [c, d]]` acting on column vectors.
pub fn q8_matrices() -> [[[u8; 2]; 2]; 2] {
    [[[0, 2], [1, 0]], [[1, 1], [1, 2]]]
}

/// `C_3² ⋊ Q_8` as the affine group generated by the translations of GF(3)²
/// and [`q8_matrices`]. Point `a + 3b` is the vector `(a, b)`.
pub fn q8_on_c3c3(cap: usize) -> Result<GroupElements, ConstructError> {
    check_cap(72, cap)?;
    let apply = |m: [[u8; 2]; 2], x: usize| {
        let (a, b) = ((x % 3) as u8, (x / 3) as u8);
        let na = (m[0][0] * a + m[0][1] * b) % 3;
        let nb = (m[1][0] * a + m[1][1] * b) % 3;
        (na + 3 * nb) as usize
    };
    let t1 = Permutation::new((0..9).map(|x| (x % 3 + 1) % 3 + 3 * (x / 3)).collect())?;
    let t2 = Permutation::new((0..9).map(|x| (x + 3) % 9).collect())?;
    let [ma, mb] = q8_matrices();
    let a = Permutation::new((0..9).map(|x| apply(ma, x)).collect())?;
    let b = Permutation::new((0..9).map(|x| apply(mb, x)).collect())?;
    Ok(GroupElements::generate(9, &[t1, t2, a, b], cap)?)
}

/// Extraspecial group of order `2^(2n+1)`: a central product of `n` copies
/// of D_8 (plus type) or of Q_8 with `n - 1` copies of D_8 (minus type).
pub fn extraspecial(n: u32, sign: ExtraspecialSign, cap: usize) -> Result<GroupElements, ConstructError> {
    if n == 0 {
        return invalid("extraspecial rank must be at least 1");
    }
    check_cap(2u128.saturating_pow(2 * n + 1), cap)?;
    let d8 = dihedral_table(4);
    let d8_center = 2; // r^2
    let (mut group, mut center) = match sign {
        ExtraspecialSign::Plus => (d8.clone(), d8_center),
        ExtraspecialSign::Minus => (dicyclic_table(2), 2), // a^2
    };
    for _ in 1..n {
        (group, center) = central_product(&group, center, &d8, d8_center)?;
    }
    regular_representation(&group, cap)
}

/// PSL(2, q) on the projective line `{0, ..., q-1, ∞ = q}`, generated by
/// `x ↦ x + 1` and `x ↦ -1/x`.
pub fn psl2(q: u64, cap: usize) -> Result<GroupElements, ConstructError> {
    if !is_prime(q) || q < 5 {
        return invalid(format!("psl2 needs a prime q ≥ 5, got {q}"));
    }
    let qq = q as u128;
    check_cap(qq * (qq * qq - 1) / 2, cap)?;
    let n = q as usize;
    let inf = n;
    let shift = Permutation::new((0..=n).map(|x| if x == inf { inf } else { (x + 1) % n }).collect())?;
    let invert = Permutation::new(
        (0..=n)
            .map(|x| match x {
                0 => inf,
                x if x == inf => 0,
                x => {
                    let inv = inv_mod(x as u64, q).expect("nonzero residue") as usize;
                    (n - inv) % n
                }
            })
            .collect(),
    )?;
    Ok(GroupElements::generate(n + 1, &[shift, invert], cap)?)
}

/// `A × B` acting on the disjoint union of their point sets.
pub fn direct_product(a: &GroupElements, b: &GroupElements, cap: usize) -> Result<GroupElements, ConstructError> {
    check_cap(a.order() as u128 * b.order() as u128, cap)?;
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(Permutation::new(g.images().chain(da..da + db).collect())?);
    }
    for g in b.generators() {
        gens.push(Permutation::new((0..da).chain(g.images().map(|x| x + da)).collect())?);
    }
    Ok(GroupElements::generate(da + db, &gens, cap)?)
}
