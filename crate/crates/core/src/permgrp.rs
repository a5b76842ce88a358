//! Permutations and fully enumerated permutation groups.
//!
//! Groups are small enough (a few thousand elements) that every element is
//! stored explicitly. Products are resolved back to element indices through a
//! hash of the image vector.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::gfp::lcm;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images do not form a bijection on {degree} points")]
    NotBijection { degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears in more than one cycle")]
    OverlappingCycles(usize),
    #[error("group closure exceeds the cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },
}

/// A bijection of `{0, ..., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection { degree: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(PermError::PointOutOfRange { point: x, degree: n });
                }
                if used[x] {
                    return Err(PermError::OverlappingCycles(x));
                }
                used[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Multiplicative order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i as u32 == x).count()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A finite permutation group with every element enumerated.
///
/// Element 0 is always the identity; the remaining elements appear in the
/// breadth-first order in which the closure discovered them.
#[derive(Debug, Clone)]
pub struct GroupElements {
    degree: usize,
    elements: Vec<Permutation>,
    generator_indices: Vec<usize>,
    index: HashMap<Permutation, usize>,
}

impl GroupElements {
    /// Breadth-first closure of `gens` on `degree` points.
    ///
    /// Each dequeued element `x` is extended by `g ∘ x` for every generator
    /// `g` in the given order. Fails once more than `cap` elements are found.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        if cap == 0 {
            return Err(PermError::ClosureExceedsCap { cap });
        }
        let mut next = 0;
        while next < elements.len() {
            for g in gens {
                let h = g.compose_unchecked(&elements[next]);
                if !index.contains_key(&h) {
                    if elements.len() == cap {
                        return Err(PermError::ClosureExceedsCap { cap });
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            next += 1;
        }
        let generator_indices = gens.iter().map(|g| index[g]).collect();
        Ok(GroupElements { degree, elements, generator_indices, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generators(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.generator_indices.iter().map(|&i| &self.elements[i])
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let prod = self.elements[i].compose_unchecked(&self.elements[j]);
        self.index[&prod]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| lcm(acc, g.order()))
    }

    /// Multiset of element orders as `order -> count`.
    pub fn element_order_multiset(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for g in &self.elements {
            *out.entry(g.order()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<&Permutation> = self.generators().collect();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose_unchecked(b) == b.compose_unchecked(a)))
    }

    /// Indices of central elements, ascending.
    pub fn center(&self) -> Vec<usize> {
        let gens: Vec<&Permutation> = self.generators().collect();
        (0..self.order())
            .filter(|&i| {
                let x = &self.elements[i];
                gens.iter().all(|g| g.compose_unchecked(x) == x.compose_unchecked(g))
            })
            .collect()
    }

    /// Smallest subgroup containing `seeds` that is normalized by the whole
    /// group, as ascending element indices.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = self.generator_indices.clone();
        let gen_inv: Vec<usize> = gens.iter().map(|&g| self.inverse_of(g)).collect();
        let mut members = HashSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let mut push = |x: usize| {
                if members.insert(x) {
                    queue.push_back(x);
                }
            };
            for &t in seeds {
                push(self.mul(s, t));
            }
            for (&g, &gi) in gens.iter().zip(&gen_inv) {
                push(self.mul(self.mul(g, s), gi));
            }
        }
        let mut out: Vec<usize> = members.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The commutator subgroup, as ascending element indices.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let gens = &self.generator_indices;
        let mut seeds = Vec::new();
        for &a in gens {
            for &b in gens {
                let ai = self.inverse_of(a);
                let bi = self.inverse_of(b);
                let c = self.mul(self.mul(ai, bi), self.mul(a, b));
                if c != 0 && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// True when the listed elements pairwise commute and every non-identity
    /// one has the same prime order. The trivial subset counts as elementary
    /// abelian.
    pub fn is_elementary_abelian(&self, subset: &[usize]) -> bool {
        let orders: HashSet<u64> = subset.iter().filter(|&&i| i != 0).map(|&i| self.order_of(i)).collect();
        if orders.len() > 1 || orders.iter().any(|&o| !crate::gfp::is_prime(o)) {
            return false;
        }
        self.is_abelian_subset(subset)
    }

    /// True when the listed elements commute pairwise.
    pub fn is_abelian_subset(&self, subset: &[usize]) -> bool {
        subset.iter().enumerate().all(|(n, &a)| subset[n + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Partition into conjugacy classes.
    ///
    /// Each class is the orbit of its least element index under conjugation by
    /// the generators. Class 0 is the identity; the rest are ordered by
    /// (representative order, size, representative index).
    pub fn conjugacy_classes(&self) -> ConjugacyClassData {
        let n = self.order();
        let gens: Vec<&Permutation> = self.generators().collect();
        let gen_inv: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();
        let mut raw_class = vec![usize::MAX; n];
        let mut raw_members: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != usize::MAX {
                continue;
            }
            let c = raw_members.len();
            let mut members = vec![start];
            raw_class[start] = c;
            let mut head = 0;
            while head < members.len() {
                let x = &self.elements[members[head]];
                for (g, gi) in gens.iter().zip(&gen_inv) {
                    let y = g.compose_unchecked(&x.compose_unchecked(gi));
                    let yi = self.index[&y];
                    if raw_class[yi] == usize::MAX {
                        raw_class[yi] = c;
                        members.push(yi);
                    }
                }
                head += 1;
            }
            members.sort_unstable();
            raw_members.push(members);
        }

        let mut order: Vec<usize> = (0..raw_members.len()).collect();
        let key = |c: usize| {
            let rep = raw_members[c][0];
            (rep != 0, self.order_of(rep), raw_members[c].len(), rep)
        };
        order.sort_by_key(|&c| key(c));
        let mut relabel = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let members: Vec<Vec<usize>> = order.iter().map(|&c| raw_members[c].clone()).collect();
        let class_of: Vec<usize> = raw_class.iter().map(|&c| relabel[c]).collect();
        let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        let sizes = members.iter().map(Vec::len).collect();
        let rep_order = reps.iter().map(|&r| self.order_of(r)).collect();
        let inverse_class = reps.iter().map(|&r| class_of[self.inverse_of(r)]).collect();
        ConjugacyClassData { class_of, reps, sizes, inverse_class, rep_order, members }
    }
}

/// Conjugacy classes of a [`GroupElements`] value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassData {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    rep_order: Vec<u64>,
    members: Vec<Vec<usize>>,
}

impl ConjugacyClassData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    pub fn rep_order(&self) -> &[u64] {
        &self.rep_order
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    /// Class of `rep^l` for every class.
    pub fn power_map(&self, group: &GroupElements, l: u64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| {
                let p = group.element(r).pow(l);
                self.class_of[group.index_of(&p).expect("powers stay in the group")]
            })
            .collect()
    }

    /// For each class, the classes of `rep^0, rep^1, ..., rep^(o-1)` where `o`
    /// is the representative's order.
    pub fn rep_power_classes(&self, group: &GroupElements) -> Vec<Vec<usize>> {
        self.reps
            .iter()
            .zip(&self.rep_order)
            .map(|(&r, &o)| {
                let mut out = Vec::with_capacity(o as usize);
                let mut x = 0;
                for _ in 0..o {
                    out.push(self.class_of[x]);
                    x = group.mul(r, x);
                }
                out
            })
            .collect()
    }
}

/// Structure constants of one class sum acting on the class algebra.
///
/// `entries[j][k]` counts pairs `(x, y) ∈ C_i × C_j` with `xy = z` for any
/// fixed `z ∈ C_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatrix {
    pub class: usize,
    pub entries: Vec<Vec<u64>>,
}

/// Class matrix of class `i`.
///
/// For each target class `k` with representative `z`, each `x ∈ C_i` yields
/// exactly one `y = x⁻¹z`, whose class receives the count.
pub fn class_matrix(group: &GroupElements, classes: &ConjugacyClassData, i: usize) -> ClassMatrix {
    let k = classes.len();
    let mut entries = vec![vec![0u64; k]; k];
    let inverses: Vec<usize> = classes.members(i).iter().map(|&x| group.inverse_of(x)).collect();
    for (target, &z) in classes.reps().iter().enumerate() {
        for &xi in &inverses {
            let y = group.mul(xi, z);
            entries[classes.class_of(y)][target] += 1;
        }
    }
    ClassMatrix { class: i, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn s3() -> GroupElements {
        GroupElements::generate(3, &[perm(&[1, 0, 2]), perm(&[1, 2, 0])], DEFAULT_CAP).unwrap()
    }

    fn s4() -> GroupElements {
        GroupElements::generate(4, &[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], DEFAULT_CAP).unwrap()
    }

    fn a5() -> GroupElements {
        GroupElements::generate(5, &[perm(&[1, 2, 0, 3, 4]), perm(&[1, 2, 3, 4, 0])], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(perm(&[1, 2, 0]).compose(&perm(&[1, 0, 2])).unwrap(), perm(&[2, 1, 0]));
        assert_eq!(Permutation::identity(3).compose(&perm(&[1, 0, 2])).unwrap(), perm(&[1, 0, 2]));
        assert!(perm(&[1, 0, 2]).compose(&perm(&[1, 0, 2])).unwrap().is_identity());
        assert_eq!(perm(&[1, 0]).compose(&perm(&[0, 1, 2])), Err(PermError::DegreeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert_eq!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]), Err(PermError::OverlappingCycles(1)));
        assert_eq!(Permutation::from_cycles(3, &[vec![0, 3]]), Err(PermError::PointOutOfRange { point: 3, degree: 3 }));
    }

    #[test]
    fn generate_examples() {
        assert_eq!(s3().order(), 6);
        let trivial = GroupElements::generate(3, &[], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        let c4 = GroupElements::generate(4, &[perm(&[1, 2, 3, 0])], 10).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.generator_indices(), &[1]);
        assert_eq!(
            GroupElements::generate(4, &[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], 23).unwrap_err(),
            PermError::ClosureExceedsCap { cap: 23 }
        );
        assert_eq!(GroupElements::generate(4, &[perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], 24).unwrap().order(), 24);
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(perm(&[1, 2, 3, 0]).order(), 4);
        let p = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(s4().exponent(), 12);
        let c4 = GroupElements::generate(4, &[perm(&[1, 2, 3, 0])], 10).unwrap();
        assert_eq!(c4.element_order_multiset(), BTreeMap::from([(1, 1), (2, 1), (4, 2)]));
    }

    fn brute_force_class_sizes(g: &GroupElements) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut sizes = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut orbit = HashSet::new();
            for h in 0..g.order() {
                orbit.insert(g.mul(g.mul(h, x), g.inverse_of(h)));
            }
            for &y in &orbit {
                seen[y] = true;
            }
            sizes.push(orbit.len());
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn class_sizes_match_brute_force() {
        for (g, expected) in [(s3(), vec![1, 3, 2]), (s4(), vec![1, 6, 3, 8, 6]), (a5(), vec![1, 15, 20, 12, 12])] {
            let classes = g.conjugacy_classes();
            let mut sorted = classes.sizes().to_vec();
            sorted.sort_unstable();
            let mut exp_sorted = expected.clone();
            exp_sorted.sort_unstable();
            assert_eq!(sorted, exp_sorted);
            assert_eq!(sorted, brute_force_class_sizes(&g));
            assert_eq!(classes.sizes()[0], 1);
            assert_eq!(classes.reps()[0], 0);
            assert_eq!(classes.inverse_class()[0], 0);
        }
        // Ordering key (rep order, size, rep) puts S3 as identity, transpositions, 3-cycles.
        assert_eq!(s3().conjugacy_classes().sizes(), &[1, 3, 2]);
    }

    #[test]
    fn power_maps_on_s3() {
        let g = s3();
        let c = g.conjugacy_classes();
        assert_eq!(c.power_map(&g, 0), vec![0, 0, 0]);
        assert_eq!(c.power_map(&g, 1), vec![0, 1, 2]);
        assert_eq!(c.power_map(&g, 2), vec![0, 0, 2]);
    }

    #[test]
    fn class_matrix_of_transpositions_in_s3() {
        let g = s3();
        let c = g.conjugacy_classes();
        let m = class_matrix(&g, &c, 1);
        // Column k holds the coefficient of class k in K_1 K_j; row j = transpositions.
        assert_eq!(m.entries[1], vec![3, 0, 3]);
        let id = class_matrix(&g, &c, 0);
        for (j, row) in id.entries.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(v, u64::from(j == k));
            }
        }
    }

    #[test]
    fn class_matrix_column_sums_on_s4() {
        let g = s4();
        let c = g.conjugacy_classes();
        let sizes = c.sizes();
        for i in 0..c.len() {
            let m = class_matrix(&g, &c, i);
            for j in 0..c.len() {
                let total: u64 = (0..c.len()).map(|k| m.entries[j][k] * sizes[k] as u64).sum();
                assert_eq!(total, (sizes[i] * sizes[j]) as u64);
            }
        }
    }

    #[test]
    fn center_and_derived_subgroup() {
        let g = s4();
        assert_eq!(g.center(), vec![0]);
        assert_eq!(g.derived_subgroup().len(), 12);
        let q8 = GroupElements::generate(
            8,
            &[
                Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap(),
                Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]]).unwrap(),
            ],
            100,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.derived_subgroup(), q8.center());
        assert!(q8.is_elementary_abelian(&q8.center()));
        assert!(!q8.is_elementary_abelian(&(0..8).collect::<Vec<_>>()));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_associative_and_inverse_antihomomorphic(
            (p, q, r) in (arb_perm(7), arb_perm(7), arb_perm(7))
        ) {
            let pq = p.compose(&q).unwrap();
            prop_assert_eq!(pq.compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
            prop_assert_eq!(pq.inverse(), q.inverse().compose(&p.inverse()).unwrap());
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        }

        #[test]
        fn cycles_roundtrip(p in arb_perm(9)) {
            prop_assert_eq!(Permutation::from_cycles(9, &p.cycles()).unwrap(), p.clone());
            prop_assert!(p.pow(p.order()).is_identity());
        }
    }
}
