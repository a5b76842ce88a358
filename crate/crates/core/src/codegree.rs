//! Codegrees, multiplicity profiles and the T'_k classification.
//!
//! For an irreducible character χ of G, `cod(χ) = |G : ker χ| / χ(1)`. The
//! multiplicity of a codegree `d` is the number of irreducible characters
//! with codegree `d`. G is T'_k when one codegree has multiplicity `k` and
//! every other codegree has multiplicity 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{character_table, Character, CharacterTable};
use crate::constructors::{cyclic, dicyclic, dihedral, direct_product, frobenius_field, q8_on_c3c3, symmetric};
use crate::gfp::{is_prime, prime_power, totient};
use crate::permgrp::GroupElements;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodegreeError {
    #[error("|G| = {order} is not divisible by |ker χ|·χ(1) = {kernel_order}·{degree}")]
    NonIntegral { order: u64, kernel_order: u64, degree: u64 },
    #[error("group is not abelian")]
    NotAbelian,
}

/// `|G| / (|ker χ| · χ(1))`.
pub fn codegree(chi: &Character, order: u64) -> Result<u64, CodegreeError> {
    let denom = chi.kernel_order * chi.degree;
    if denom == 0 || !order.is_multiple_of(denom) {
        return Err(CodegreeError::NonIntegral { order, kernel_order: chi.kernel_order, degree: chi.degree });
    }
    Ok(order / denom)
}

/// Codegree of every character, in table order.
pub fn codegrees(table: &CharacterTable) -> Result<Vec<u64>, CodegreeError> {
    table.characters().iter().map(|c| codegree(c, table.order())).collect()
}

/// `d -> m'_G(d)` over the codegrees of G.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CodegreeProfile(BTreeMap<u64, usize>);

impl CodegreeProfile {
    pub fn from_counts(counts: impl IntoIterator<Item = (u64, usize)>) -> Self {
        CodegreeProfile(counts.into_iter().collect())
    }

    pub fn multiplicity(&self, d: u64) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    /// Number of characters counted, i.e. `|Irr(G)|`.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Number of distinct codegrees, `|cod(G)|`.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.0.iter().map(|(&d, &m)| (d, m))
    }

    /// `[[d, m], ...]` sorted by `d`.
    pub fn pairs(&self) -> Vec<[u64; 2]> {
        self.iter().map(|(d, m)| [d, m as u64]).collect()
    }
}

impl fmt::Display for CodegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, m)| format!("{d}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn count<I: IntoIterator<Item = u64>>(xs: I) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for x in xs {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

pub fn codegree_profile(table: &CharacterTable) -> Result<CodegreeProfile, CodegreeError> {
    Ok(CodegreeProfile(count(codegrees(table)?)))
}

/// `d -> m_G(d)` over the character degrees of G.
pub fn degree_profile(table: &CharacterTable) -> BTreeMap<u64, usize> {
    count(table.degrees())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Classification {
    /// `m'(d0) = k` and every other codegree has multiplicity 1.
    TkPrime { k: u64, d0: u64 },
    /// Two distinct codegrees, each of multiplicity at least 2.
    NotTkPrime { witness: (u64, u64) },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::TkPrime { k, d0 } => write!(f, "TkPrime({k},{d0})"),
            Classification::NotTkPrime { witness: (a, b) } => write!(f, "NotTkPrime({a},{b})"),
        }
    }
}

/// Decides T'_k from a codegree profile.
///
/// With exactly one repeated codegree that codegree is `d0`. When nothing
/// repeats, `k = 1` and `d0` is the largest codegree. With two or more
/// repeated codegrees the witness is the two largest of them.
pub fn classify_tkprime(profile: &CodegreeProfile) -> Classification {
    let repeated: Vec<u64> = profile.iter().filter(|&(_, m)| m >= 2).map(|(d, _)| d).collect();
    match repeated.as_slice() {
        [] => Classification::TkPrime { k: 1, d0: profile.iter().last().map_or(1, |(d, _)| d) },
        [d] => Classification::TkPrime { k: profile.multiplicity(*d) as u64, d0: *d },
        [.., d1, d2] => Classification::NotTkPrime { witness: (*d1, *d2) },
    }
}

/// T_k verdict over the nontrivial character degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum TkVerdict {
    Tk {
        k: u64,
        d0: u64,
    },
    NotTk {
        witness: (u64, u64),
    },
    /// No nonlinear characters.
    NotApplicable,
}

impl fmt::Display for TkVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TkVerdict::Tk { k, d0 } => write!(f, "T_{k}(d0={d0})"),
            TkVerdict::NotTk { witness: (a, b) } => write!(f, "NotTk({a},{b})"),
            TkVerdict::NotApplicable => write!(f, "NotApplicable"),
        }
    }
}

/// Same rules as [`classify_tkprime`], applied to degrees other than 1.
pub fn classify_tk(degrees: &BTreeMap<u64, usize>) -> TkVerdict {
    let nontrivial: Vec<(u64, usize)> = degrees.iter().filter(|(&d, _)| d > 1).map(|(&d, &m)| (d, m)).collect();
    let Some(&(largest, _)) = nontrivial.last() else {
        return TkVerdict::NotApplicable;
    };
    let repeated: Vec<u64> = nontrivial.iter().filter(|(_, m)| *m >= 2).map(|(d, _)| *d).collect();
    match repeated.as_slice() {
        [] => TkVerdict::Tk { k: 1, d0: largest },
        [d] => TkVerdict::Tk { k: degrees[d] as u64, d0: *d },
        [.., d1, d2] => TkVerdict::NotTk { witness: (*d1, *d2) },
    }
}

/// `n` with `|cod(G)| = |Irr(G)| - n`.
pub fn dprime_n(table: &CharacterTable) -> Result<usize, CodegreeError> {
    let profile = codegree_profile(table)?;
    Ok(profile.total() - profile.distinct())
}

/// True when the nonlinear degrees are pairwise distinct (a D_0-group).
pub fn is_d0_degrees(table: &CharacterTable) -> bool {
    degree_profile(table).iter().all(|(&d, &m)| d == 1 || m == 1)
}

/// A normal subgroup as a union of conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalSubgroup {
    pub order: u64,
    /// Class indices, ascending.
    pub classes: Vec<usize>,
    /// Element indices, ascending.
    pub elements: Vec<usize>,
    mask: ClassMask,
}

impl NormalSubgroup {
    pub fn contains_class(&self, class: usize) -> bool {
        self.mask.contains(class)
    }
}

/// Set of class indices as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ClassMask(Vec<u64>);

impl ClassMask {
    fn from_classes(len: usize, classes: &[usize]) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        for &c in classes {
            words[c / 64] |= 1 << (c % 64);
        }
        ClassMask(words)
    }

    fn contains(&self, c: usize) -> bool {
        self.0[c / 64] >> (c % 64) & 1 == 1
    }

    fn meet(&self, other: &ClassMask) -> ClassMask {
        ClassMask(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    /// True when the intersection is at most the identity class.
    fn meets_trivially(&self, other: &ClassMask) -> bool {
        self.0.iter().zip(&other.0).enumerate().all(|(i, (a, b))| {
            let m = a & b;
            if i == 0 {
                m & !1 == 0
            } else {
                m == 0
            }
        })
    }

    fn classes(&self) -> Vec<usize> {
        (0..self.0.len() * 64).filter(|&c| self.contains(c)).collect()
    }
}

/// Every normal subgroup, as the intersections of character kernels (G being
/// the empty intersection). Sorted by order, then by class set.
pub fn normal_subgroup_lattice(table: &CharacterTable) -> Vec<NormalSubgroup> {
    let classes = table.classes();
    let k = classes.len();
    let kernels: BTreeSet<ClassMask> =
        table.characters().iter().map(|c| ClassMask::from_classes(k, &c.kernel_classes)).collect();
    let whole = ClassMask::from_classes(k, &(0..k).collect::<Vec<_>>());
    // Any intersection of kernels is reached by meeting with one kernel at a time.
    let mut seen: BTreeSet<ClassMask> = BTreeSet::from([whole.clone()]);
    let mut queue = vec![whole];
    while let Some(n) = queue.pop() {
        for ker in &kernels {
            let m = n.meet(ker);
            if !seen.contains(&m) {
                seen.insert(m.clone());
                queue.push(m);
            }
        }
    }
    let mut out: Vec<NormalSubgroup> = seen
        .into_iter()
        .map(|mask| {
            let cs = mask.classes();
            let mut elements: Vec<usize> = cs.iter().flat_map(|&c| classes.members(c).iter().copied()).collect();
            elements.sort_unstable();
            NormalSubgroup { order: elements.len() as u64, classes: cs, elements, mask }
        })
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub character: usize,
    pub codegree: u64,
    pub subgroup_order: u64,
    pub detail: String,
}

/// If `ker χ ∩ K = 1` for a nontrivial abelian normal `K`, then `|K|`
/// divides `cod(χ)`.
///
/// Only abelian `K` are swept. For nonabelian `K` the divisibility can fail:
/// in `S_4` with `K = A_4` the faithful degree-3 characters have codegree 8.
/// The general bound is `|K| / λ(1)` for a constituent `λ` of `χ_K`.
pub fn check_lemma_small_b(
    table: &CharacterTable,
    lattice: &[NormalSubgroup],
    group: &GroupElements,
) -> Result<Vec<LemmaViolation>, CodegreeError> {
    let all_abelian = group.is_abelian();
    let abelian: Vec<&NormalSubgroup> =
        lattice.iter().filter(|k| k.order > 1 && (all_abelian || group.is_abelian_subset(&k.elements))).collect();
    let k = table.classes().len();
    let mut out = Vec::new();
    for (idx, chi) in table.characters().iter().enumerate() {
        let cod = codegree(chi, table.order())?;
        let ker = ClassMask::from_classes(k, &chi.kernel_classes);
        for n in abelian.iter().copied() {
            if cod % n.order != 0 && ker.meets_trivially(&n.mask) {
                out.push(LemmaViolation {
                    character: idx,
                    codegree: cod,
                    subgroup_order: n.order,
                    detail: format!("|K| = {} does not divide cod = {cod}", n.order),
                });
            }
        }
    }
    Ok(out)
}

/// A faithful χ never has prime codegree `p` with `p | |G|/|K|` for a
/// nontrivial proper normal `K`.
pub fn check_lemma_small_c(
    table: &CharacterTable,
    lattice: &[NormalSubgroup],
) -> Result<Vec<LemmaViolation>, CodegreeError> {
    let order = table.order();
    let mut out = Vec::new();
    for (idx, chi) in table.characters().iter().enumerate().filter(|(_, c)| c.faithful) {
        let cod = codegree(chi, order)?;
        if !is_prime(cod) {
            continue;
        }
        for k in lattice.iter().filter(|k| k.order > 1 && k.order < order) {
            if (order / k.order).is_multiple_of(cod) {
                out.push(LemmaViolation {
                    character: idx,
                    codegree: cod,
                    subgroup_order: k.order,
                    detail: format!("faithful character has prime codegree {cod} dividing |G|/|K|"),
                });
            }
        }
    }
    Ok(out)
}

/// For abelian G the codegree of a linear character is its order, so the
/// codegree multiset equals the element-order multiset.
pub fn check_abelian_order_law(table: &CharacterTable, group: &GroupElements) -> Result<bool, CodegreeError> {
    if !group.is_abelian() {
        return Err(CodegreeError::NotAbelian);
    }
    let cods = count(codegrees(table)?);
    let orders: BTreeMap<u64, usize> = group.element_order_multiset();
    Ok(cods == orders)
}

/// For `D_{2n}` with `n` odd, each divisor `d > 1` of `n` is the codegree of
/// exactly `φ(d)/2` degree-2 characters.
pub fn dihedral_codegree_count_check(n: u64, table: &CharacterTable) -> Result<bool, CodegreeError> {
    let mut by_cod: BTreeMap<u64, u64> = BTreeMap::new();
    for chi in table.characters().iter().filter(|c| c.degree == 2) {
        *by_cod.entry(codegree(chi, table.order())?).or_insert(0) += 1;
    }
    Ok((2..=n).filter(|d| n.is_multiple_of(*d)).all(|d| by_cod.get(&d).copied().unwrap_or(0) == totient(d) / 2))
}

/// Which clause of the T'_k classification a group instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremCase {
    #[serde(rename = "A-PSL2(5)")]
    APsl2_5,
    #[serde(rename = "A-PSL2(7)")]
    APsl2_7,
    B1,
    B2,
    #[serde(rename = "B3-elemab")]
    B3ElemAb,
    #[serde(rename = "B3-extraspecial2")]
    B3Extraspecial2,
    B4,
    B5,
    #[serde(rename = "NotTkPrime-consistent")]
    NotTkPrimeConsistent,
    #[serde(rename = "UNEXPECTED")]
    Unexpected,
}

impl TheoremCase {
    pub fn label(self) -> &'static str {
        match self {
            TheoremCase::APsl2_5 => "A-PSL2(5)",
            TheoremCase::APsl2_7 => "A-PSL2(7)",
            TheoremCase::B1 => "B1",
            TheoremCase::B2 => "B2",
            TheoremCase::B3ElemAb => "B3-elemab",
            TheoremCase::B3Extraspecial2 => "B3-extraspecial2",
            TheoremCase::B4 => "B4",
            TheoremCase::B5 => "B5",
            TheoremCase::NotTkPrimeConsistent => "NotTkPrime-consistent",
            TheoremCase::Unexpected => "UNEXPECTED",
        }
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

struct Reference {
    order: u64,
    profile: CodegreeProfile,
}

fn reference_profiles(which: &OnceLock<Vec<Reference>>, build: fn() -> Vec<GroupElements>) -> &[Reference] {
    which.get_or_init(|| {
        build()
            .iter()
            .map(|g| {
                let t = character_table(g).expect("reference groups have character tables");
                Reference { order: g.order() as u64, profile: codegree_profile(&t).expect("integral codegrees") }
            })
            .collect()
    })
}

fn case_b1_groups() -> Vec<GroupElements> {
    let cap = crate::permgrp::DEFAULT_CAP;
    vec![
        cyclic(4, cap).unwrap(),
        symmetric(4, cap).unwrap(),
        frobenius_field(5, 1, 4, cap).unwrap(),
        dicyclic(3, cap).unwrap(),
    ]
}

fn case_b2_groups() -> Vec<GroupElements> {
    let cap = crate::permgrp::DEFAULT_CAP;
    vec![
        direct_product(&cyclic(2, cap).unwrap(), &symmetric(3, cap).unwrap(), cap).unwrap(),
        dihedral(9, cap).unwrap(),
        q8_on_c3c3(cap).unwrap(),
    ]
}

fn matches_reference(refs: &[Reference], order: u64, profile: &CodegreeProfile) -> bool {
    refs.iter().any(|r| r.order == order && &r.profile == profile)
}

fn has_elementary_abelian_normal(group: &GroupElements, lattice: &[NormalSubgroup], order: u64) -> bool {
    lattice.iter().any(|n| n.order == order && group.is_elementary_abelian(&n.elements))
}

fn is_extraspecial_2group(group: &GroupElements) -> Option<u32> {
    let order = group.order() as u64;
    let (2, k) = prime_power(order)? else {
        return None;
    };
    if k < 3 || k % 2 == 0 {
        return None;
    }
    let center = group.center();
    if center.len() != 2 || group.derived_subgroup() != center {
        return None;
    }
    let squares_central = (0..group.order()).all(|x| center.contains(&group.mul(x, x)));
    squares_central.then_some((k - 1) / 2)
}

/// Matches a classified group against the clauses of the classification.
///
/// Groups are recognised by codegree-profile equality with constructed
/// reference groups plus cheap structural predicates; no isomorphism test is
/// attempted. A T'_k group that matches nothing is reported as
/// [`TheoremCase::Unexpected`].
pub fn match_theorem_case(
    group: &GroupElements,
    table: &CharacterTable,
    classification: &Classification,
) -> Result<TheoremCase, CodegreeError> {
    static B1: OnceLock<Vec<Reference>> = OnceLock::new();
    static B2: OnceLock<Vec<Reference>> = OnceLock::new();

    let Classification::TkPrime { k, .. } = *classification else {
        return Ok(TheoremCase::NotTkPrimeConsistent);
    };
    let order = table.order();
    let profile = codegree_profile(table)?;
    let cell = std::cell::OnceCell::new();
    let lattice = || cell.get_or_init(|| normal_subgroup_lattice(table)).as_slice();

    if (order == 60 || order == 168) && k == 2 && lattice().len() == 2 {
        return Ok(if order == 60 { TheoremCase::APsl2_5 } else { TheoremCase::APsl2_7 });
    }
    if k == 2
        && [4, 24, 20, 12].contains(&order)
        && matches_reference(reference_profiles(&B1, case_b1_groups), order, &profile)
    {
        return Ok(TheoremCase::B1);
    }
    if k == 3
        && [12, 18, 72].contains(&order)
        && matches_reference(reference_profiles(&B2, case_b2_groups), order, &profile)
    {
        return Ok(TheoremCase::B2);
    }
    if group.is_abelian() && order > 1 && k == order - 1 {
        let orders: BTreeSet<u64> = group.element_order_multiset().into_keys().filter(|&o| o > 1).collect();
        if orders.len() == 1 && orders.iter().all(|&o| is_prime(o)) {
            return Ok(TheoremCase::B3ElemAb);
        }
    }
    if let Some(n) = is_extraspecial_2group(group) {
        if k == (1u64 << (2 * n)) - 1 {
            return Ok(TheoremCase::B3Extraspecial2);
        }
    }
    for beta in 2..=20u32 {
        let two_beta = 1u64 << beta;
        let p = two_beta - 1;
        if order == two_beta * p
            && is_prime(p)
            && k == p - 1
            && has_elementary_abelian_normal(group, lattice(), two_beta)
        {
            return Ok(TheoremCase::B4);
        }
    }
    if order.is_multiple_of(2) {
        let half = order / 2;
        if let Some((p, _)) = prime_power(half) {
            if p != 2 && k == (half - 1) / 2 && has_elementary_abelian_normal(group, lattice(), half) {
                return Ok(TheoremCase::B5);
            }
        }
    }
    Ok(TheoremCase::Unexpected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::constructors::{abelian, dihedral, elementary_abelian, extraspecial, psl2, ExtraspecialSign};
    use crate::permgrp::DEFAULT_CAP;

    const CAP: usize = DEFAULT_CAP;

    fn table(g: &GroupElements) -> CharacterTable {
        character_table(g).unwrap()
    }

    fn profile_of(g: &GroupElements) -> Vec<[u64; 2]> {
        codegree_profile(&table(g)).unwrap().pairs()
    }

    #[test]
    fn codegrees_of_known_characters() {
        let d8 = extraspecial(1, ExtraspecialSign::Plus, CAP).unwrap();
        let t = table(&d8);
        assert_eq!(codegree(&t.characters()[0], 8).unwrap(), 1);
        assert_eq!(codegree(t.characters().last().unwrap(), 8).unwrap(), 4);
        let s4 = symmetric(4, CAP).unwrap();
        let t = table(&s4);
        let faithful3: Vec<u64> =
            t.characters().iter().filter(|c| c.degree == 3).map(|c| codegree(c, 24).unwrap()).collect();
        assert_eq!(faithful3, vec![8, 8]);
    }

    #[test]
    fn profiles() {
        assert_eq!(profile_of(&symmetric(4, CAP).unwrap()), vec![[1, 1], [2, 1], [3, 1], [8, 2]]);
        assert_eq!(profile_of(&cyclic(4, CAP).unwrap()), vec![[1, 1], [2, 1], [4, 2]]);
        assert_eq!(profile_of(&psl2(5, CAP).unwrap()), vec![[1, 1], [12, 1], [15, 1], [20, 2]]);
    }

    #[test]
    fn tkprime_classification() {
        let s4 = CodegreeProfile::from_counts([(1, 1), (2, 1), (3, 1), (8, 2)]);
        assert_eq!(classify_tkprime(&s4), Classification::TkPrime { k: 2, d0: 8 });
        let c9 = CodegreeProfile::from_counts([(1, 1), (3, 2), (9, 6)]);
        assert_eq!(classify_tkprime(&c9), Classification::NotTkPrime { witness: (3, 9) });
        let trivial = CodegreeProfile::from_counts([(1, 1)]);
        assert_eq!(classify_tkprime(&trivial), Classification::TkPrime { k: 1, d0: 1 });
        let d20 = CodegreeProfile::from_counts([(1, 1), (2, 3), (5, 2), (10, 2)]);
        assert_eq!(classify_tkprime(&d20), Classification::NotTkPrime { witness: (5, 10) });
        let s3 = CodegreeProfile::from_counts([(1, 1), (2, 1), (3, 1)]);
        assert_eq!(classify_tkprime(&s3), Classification::TkPrime { k: 1, d0: 3 });
    }

    #[test]
    fn tk_classification() {
        let psl25 = BTreeMap::from([(1, 1), (3, 2), (4, 1), (5, 1)]);
        assert_eq!(classify_tk(&psl25), TkVerdict::Tk { k: 2, d0: 3 });
        let s3 = BTreeMap::from([(1, 2), (2, 1)]);
        assert_eq!(classify_tk(&s3), TkVerdict::Tk { k: 1, d0: 2 });
        assert_eq!(classify_tk(&BTreeMap::from([(1, 4)])), TkVerdict::NotApplicable);
    }

    #[test]
    fn d_prime_counts() {
        assert_eq!(dprime_n(&table(&symmetric(3, CAP).unwrap())).unwrap(), 0);
        assert_eq!(dprime_n(&table(&cyclic(2, CAP).unwrap())).unwrap(), 0);
        let s4 = table(&symmetric(4, CAP).unwrap());
        assert_eq!(dprime_n(&s4).unwrap(), 1);
        assert!(!is_d0_degrees(&s4));
        assert!(is_d0_degrees(&table(&symmetric(3, CAP).unwrap())));
    }

    #[test]
    fn lattices() {
        let orders =
            |g: GroupElements| -> Vec<u64> { normal_subgroup_lattice(&table(&g)).iter().map(|n| n.order).collect() };
        assert_eq!(orders(symmetric(4, CAP).unwrap()), vec![1, 4, 12, 24]);
        assert_eq!(orders(psl2(5, CAP).unwrap()), vec![1, 60]);
        assert_eq!(orders(extraspecial(1, ExtraspecialSign::Minus, CAP).unwrap()), vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn normal_subgroups_are_subgroups() {
        let g = symmetric(4, CAP).unwrap();
        for n in normal_subgroup_lattice(&table(&g)) {
            for &a in &n.elements {
                for &b in &n.elements {
                    assert!(n.elements.binary_search(&g.mul(a, g.inverse_of(b))).is_ok());
                }
            }
        }
    }

    #[test]
    fn lemma_checks() {
        for g in [
            symmetric(4, CAP).unwrap(),
            extraspecial(1, ExtraspecialSign::Minus, CAP).unwrap(),
            abelian(&[2, 2], CAP).unwrap(),
        ] {
            let t = table(&g);
            let lattice = normal_subgroup_lattice(&t);
            assert!(check_lemma_small_b(&t, &lattice, &g).unwrap().is_empty());
            assert!(check_lemma_small_c(&t, &lattice).unwrap().is_empty());
        }
    }

    #[test]
    fn divisibility_fails_for_nonabelian_kernel_complement() {
        let s4 = symmetric(4, CAP).unwrap();
        let t = table(&s4);
        let lattice = normal_subgroup_lattice(&t);
        let a4 = lattice.iter().find(|n| n.order == 12).unwrap();
        assert!(!s4.is_abelian_subset(&a4.elements));
        let faithful = t.characters().iter().find(|c| c.faithful).unwrap();
        assert_eq!(codegree(faithful, 24).unwrap() % 12, 8);
        let v4 = lattice.iter().find(|n| n.order == 4).unwrap();
        assert!(s4.is_abelian_subset(&v4.elements));
        assert_eq!(codegree(faithful, 24).unwrap() % 4, 0);
    }

    #[test]
    fn abelian_law_and_dihedral_counts() {
        for g in [cyclic(4, CAP).unwrap(), cyclic(6, CAP).unwrap(), elementary_abelian(2, 3, CAP).unwrap()] {
            assert!(check_abelian_order_law(&table(&g), &g).unwrap());
        }
        let s3 = symmetric(3, CAP).unwrap();
        assert_eq!(check_abelian_order_law(&table(&s3), &s3), Err(CodegreeError::NotAbelian));
        for n in [3u64, 5, 9] {
            assert!(dihedral_codegree_count_check(n, &table(&dihedral(n, CAP).unwrap())).unwrap());
        }
        let d18 = codegree_profile(&table(&dihedral(9, CAP).unwrap())).unwrap();
        assert_eq!((d18.multiplicity(9), d18.multiplicity(3)), (3, 1));
        let d10 = codegree_profile(&table(&dihedral(5, CAP).unwrap())).unwrap();
        assert_eq!(d10.multiplicity(5), 2);
    }

    #[test]
    fn theorem_cases() {
        let case = |g: GroupElements| {
            let t = table(&g);
            let c = classify_tkprime(&codegree_profile(&t).unwrap());
            match_theorem_case(&g, &t, &c).unwrap()
        };
        assert_eq!(case(symmetric(4, CAP).unwrap()), TheoremCase::B1);
        assert_eq!(case(elementary_abelian(5, 1, CAP).unwrap()), TheoremCase::B3ElemAb);
        assert_eq!(case(cyclic(6, CAP).unwrap()), TheoremCase::NotTkPrimeConsistent);
        // The trivial group is T'_1 but is not on the list.
        assert_eq!(case(cyclic(1, CAP).unwrap()), TheoremCase::Unexpected);
    }

    #[test]
    fn classification_serializes_with_verdict_tag() {
        let c = Classification::TkPrime { k: 2, d0: 8 };
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"verdict":"TkPrime","k":2,"d0":8}"#);
        let n = Classification::NotTkPrime { witness: (3, 6) };
        assert_eq!(serde_json::to_string(&n).unwrap(), r#"{"verdict":"NotTkPrime","witness":[3,6]}"#);
        assert_eq!(serde_json::to_string(&TheoremCase::APsl2_5).unwrap(), r#""A-PSL2(5)""#);
    }
}
