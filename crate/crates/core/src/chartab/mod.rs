//! Exact character tables by the Dixon-Schneider method.
//!
//! The class algebra is diagonalised over a prime field GF(p) with
//! `p ≡ 1 (mod exp G)` and `p > 2√|G|`. Its simultaneous eigenvectors give
//! the central characters, from which degrees are recovered by orthogonality
//! and values are lifted to multiplicities of `e`-th roots of unity.
//!
//! Values are never rounded or evaluated in floating point: a value is stored
//! as the multiset of eigenvalues of a representing matrix.

mod dixon;
mod verify;

pub use dixon::{check_dixon_prime, degree_from_omega, dixon_prime, lift_values, omega_eigenvectors};
pub use verify::{row_inner_product, verify_orthogonality, OrthogonalityReport};

use std::fmt;

use thiserror::Error;

use crate::gfp::{pow_mod, root_of_unity, FpMatrix, GfpError};
use crate::permgrp::{class_matrix, ConjugacyClassData, GroupElements};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error(transparent)]
    Gfp(#[from] GfpError),
    #[error("prime {p} unusable: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("class algebra did not split: a block of dimension {dim} remains")]
    SplitIncomplete { dim: usize },
    #[error("degree recovery: {value} is not a square")]
    NotASquare { value: u64 },
    #[error("recovered degree {degree} has square above |G| = {order}")]
    DegreeOutOfRange { degree: u64, order: u64 },
    #[error("value lift failed at class {class}: {detail}")]
    LiftInconsistent { class: usize, detail: String },
    #[error("table invariant violated: {0}")]
    Invariant(String),
}

/// `χ(g)` as eigenvalue multiplicities: `mult[k]` counts `ζ_e^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterValue {
    mult: Vec<u32>,
}

impl CharacterValue {
    pub fn new(mult: Vec<u32>) -> Self {
        assert!(!mult.is_empty());
        CharacterValue { mult }
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    pub fn exponent(&self) -> usize {
        self.mult.len()
    }

    /// Sum of multiplicities, i.e. the degree of the owning character.
    pub fn weight(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    /// True iff every eigenvalue is 1, i.e. the value equals the degree.
    pub fn is_trivial(&self) -> bool {
        self.mult[1..].iter().all(|&m| m == 0)
    }

    /// `(k, mult[k])` for the nonzero entries.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mult.iter().enumerate().filter(|(_, &m)| m != 0).map(|(k, &m)| (k, m))
    }

    /// Image in GF(p) given `zeta_powers[k] = ζ^k mod p`.
    pub fn to_fp(&self, zeta_powers: &[u64], p: u64) -> u64 {
        self.terms().fold(0, |acc, (k, m)| (acc + m as u64 * zeta_powers[k]) % p)
    }
}

impl fmt::Display for CharacterValue {
    /// `E(e)^k` notation; a value that is a plain integer multiple of 1 is
    /// printed as that integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "{}", self.mult[0]);
        }
        let e = self.exponent();
        let parts: Vec<String> = self
            .terms()
            .map(|(k, m)| {
                let root = if k == 0 { "1".to_string() } else { format!("E({e})^{k}") };
                if m == 1 {
                    root
                } else {
                    format!("{m}*{root}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<CharacterValue>,
    pub kernel_classes: Vec<usize>,
    pub kernel_order: u64,
    pub faithful: bool,
}

impl Character {
    fn from_values(degree: u64, values: Vec<CharacterValue>, sizes: &[usize]) -> Self {
        let kernel_classes: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_trivial()).collect();
        let kernel_order = kernel_classes.iter().map(|&i| sizes[i] as u64).sum();
        let faithful = kernel_classes == [0];
        Character { degree, values, kernel_classes, kernel_order, faithful }
    }

    pub fn is_principal(&self) -> bool {
        self.degree == 1 && self.values.iter().all(CharacterValue::is_trivial)
    }
}

/// The irreducible characters of a group together with the class data they
/// are indexed by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    order: u64,
    classes: ConjugacyClassData,
    exponent: u64,
    prime: u64,
    characters: Vec<Character>,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &ConjugacyClassData {
        &self.classes
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    /// `ζ^k mod p` for `k < e`, with `ζ = root_of_unity(p, e)`.
    pub fn zeta_powers(&self) -> Vec<u64> {
        let z = root_of_unity(self.prime, self.exponent).expect("table prime admits e-th roots");
        (0..self.exponent).map(|k| pow_mod(z, k, self.prime)).collect()
    }

    /// Same table with the characters reordered by `perm` (a permutation of
    /// character indices). Exposed so determinism of downstream consumers
    /// can be tested.
    pub fn with_character_order(&self, perm: &[usize]) -> CharacterTable {
        let mut t = self.clone();
        t.characters = perm.iter().map(|&i| self.characters[i].clone()).collect();
        t
    }
}

#[derive(Debug, Clone, Default)]
pub struct TableOptions {
    /// Overrides the automatically chosen working prime.
    pub prime: Option<u64>,
}

pub fn character_table(group: &GroupElements) -> Result<CharacterTable, ChartabError> {
    character_table_with(group, &TableOptions::default())
}

pub fn character_table_with(group: &GroupElements, opts: &TableOptions) -> Result<CharacterTable, ChartabError> {
    let classes = group.conjugacy_classes();
    character_table_from_classes(group, classes, opts)
}

pub fn character_table_from_classes(
    group: &GroupElements,
    classes: ConjugacyClassData,
    opts: &TableOptions,
) -> Result<CharacterTable, ChartabError> {
    let order = group.order() as u64;
    let exponent = group.exponent();
    let prime = match opts.prime {
        Some(p) => {
            check_dixon_prime(p, order, exponent)?;
            p
        }
        None => dixon_prime(order, exponent)?,
    };
    let zeta = root_of_unity(prime, exponent)?;
    let k = classes.len();

    let omegas = omega_eigenvectors(k, prime, |i| {
        let m = class_matrix(group, &classes, i);
        FpMatrix::from_fn(prime, k, k, |r, c| m.entries[r][c] % prime)
    })?;

    let rep_powers = classes.rep_power_classes(group);
    let mut characters = omegas
        .iter()
        .map(|w| {
            let d = degree_from_omega(w, classes.sizes(), classes.inverse_class(), order, prime)?;
            let values = lift_values(w, d, classes.sizes(), &rep_powers, prime, exponent, zeta)?;
            Ok(Character::from_values(d, values, classes.sizes()))
        })
        .collect::<Result<Vec<_>, ChartabError>>()?;
    // Degree ascending, then value vectors descending so the principal
    // character leads the linear ones.
    characters.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.values.cmp(&a.values)));

    let table = CharacterTable { order, classes, exponent, prime, characters };
    check_table(&table)?;
    Ok(table)
}

fn check_table(t: &CharacterTable) -> Result<(), ChartabError> {
    let fail = |msg: String| Err(ChartabError::Invariant(msg));
    if t.characters.len() != t.classes.len() {
        return fail(format!("{} characters for {} classes", t.characters.len(), t.classes.len()));
    }
    let sum_sq: u64 = t.characters.iter().map(|c| c.degree * c.degree).sum();
    if sum_sq != t.order {
        return fail(format!("sum of squared degrees is {sum_sq}, |G| = {}", t.order));
    }
    if t.characters.iter().filter(|c| c.is_principal()).count() != 1 || !t.characters[0].is_principal() {
        return fail("principal character is not unique or not first".into());
    }
    for c in &t.characters {
        if !t.order.is_multiple_of(c.degree) || !t.order.is_multiple_of(c.kernel_order) {
            return fail(format!("degree {} or kernel order {} does not divide |G|", c.degree, c.kernel_order));
        }
        if c.values[0].mult()[0] as u64 != c.degree || c.values.iter().any(|v| v.weight() != c.degree) {
            return fail("multiplicities do not sum to the degree".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, psl2, symmetric};
    use crate::gfp::Subspace;
    use crate::permgrp::DEFAULT_CAP;

    #[test]
    fn s3_table() {
        let g = symmetric(3, DEFAULT_CAP).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let kernels: Vec<u64> = t.characters().iter().map(|c| c.kernel_order).collect();
        assert_eq!(kernels, vec![6, 3, 1]);
        assert!(t.characters()[2].faithful);
        let sign = &t.characters()[1];
        assert_eq!(sign.values[1].mult(), &[0, 0, 0, 1, 0, 0]);
        assert_eq!(t.characters()[2].values[2].mult(), &[0, 0, 1, 0, 1, 0]);
        assert_eq!(t.characters()[2].values[2].to_string(), "E(6)^2+E(6)^4");
    }

    #[test]
    fn s3_transposition_matrix_eigenvalues() {
        // ω at the transposition class is 3χ(t)/χ(1): 3, -3 and 0 for the
        // trivial, sign and degree-2 characters, i.e. {0, 3, 4} mod 7.
        let g = symmetric(3, DEFAULT_CAP).unwrap();
        let c = g.conjugacy_classes();
        let m = class_matrix(&g, &c, 1);
        let fp = FpMatrix::from_fn(7, 3, 3, |r, col| m.entries[r][col]);
        let split = crate::gfp::eigen_split(&Subspace::full(7, 3), &fp).unwrap();
        let eig: Vec<(u64, usize)> = split.iter().map(|(l, s)| (*l, s.dim())).collect();
        assert_eq!(eig, vec![(0, 1), (3, 1), (4, 1)]);
    }

    #[test]
    fn omega_vectors_for_small_groups() {
        let trivial = cyclic(1, DEFAULT_CAP).unwrap();
        let c = trivial.conjugacy_classes();
        let w = omega_eigenvectors(c.len(), 3, |_| unreachable!()).unwrap();
        assert_eq!(w, vec![vec![1]]);

        let c4 = cyclic(4, DEFAULT_CAP).unwrap();
        let classes = c4.conjugacy_classes();
        let p = dixon_prime(4, 4).unwrap();
        let w = omega_eigenvectors(4, p, |i| {
            let m = class_matrix(&c4, &classes, i);
            FpMatrix::from_fn(p, 4, 4, |r, col| m.entries[r][col])
        })
        .unwrap();
        assert_eq!(w.len(), 4);
        for v in &w {
            assert!(v.iter().all(|&x| pow_mod(x, 4, p) == 1));
        }

        let s3 = symmetric(3, DEFAULT_CAP).unwrap();
        let classes = s3.conjugacy_classes();
        let w = omega_eigenvectors(3, 7, |i| {
            let m = class_matrix(&s3, &classes, i);
            FpMatrix::from_fn(7, 3, 3, |r, col| m.entries[r][col])
        })
        .unwrap();
        assert!(w.contains(&vec![1, 0, 6]));
    }

    #[test]
    fn cyclic_and_psl_tables() {
        let t = character_table(&cyclic(4, DEFAULT_CAP).unwrap()).unwrap();
        let mut kernels: Vec<u64> = t.characters().iter().map(|c| c.kernel_order).collect();
        kernels.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(kernels, vec![4, 2, 1, 1]);

        let t = character_table(&psl2(7, DEFAULT_CAP).unwrap()).unwrap();
        assert_eq!(t.degrees(), vec![1, 3, 3, 6, 7, 8]);
        assert!(t.characters()[1..].iter().all(|c| c.faithful));
    }

    #[test]
    fn prime_override() {
        let g = symmetric(4, DEFAULT_CAP).unwrap();
        let t = character_table_with(&g, &TableOptions { prime: Some(37) }).unwrap();
        assert_eq!(t.prime(), 37);
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        assert!(matches!(
            character_table_with(&g, &TableOptions { prime: Some(11) }),
            Err(ChartabError::BadPrime { p: 11, .. })
        ));
    }
}
