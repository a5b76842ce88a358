use std::collections::VecDeque;

use super::ConstructError;
use crate::permgrp::{GroupElements, Permutation};

/// A group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

/// Associativity is checked exhaustively only up to this order.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 64;

impl TableGroup {
    /// Validates the table: closure, a unique two-sided identity, inverses
    /// and, for small orders, associativity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ConstructError> {
        let n = labels.len();
        let bad = |msg: String| Err(ConstructError::Table(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad(format!("table is not {n}x{n}"));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return bad("entry out of range".into());
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        let ids: Vec<usize> = (0..n).filter(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x)).collect();
        if ids.len() != 1 {
            return bad(format!("{} two-sided identities", ids.len()));
        }
        let identity = ids[0];
        for (a, label) in labels.iter().enumerate() {
            if !(0..n).any(|b| mul(a, b) == identity && mul(b, a) == identity) {
                return bad(format!("element {label} has no inverse"));
            }
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                            return bad(format!("not associative at ({}, {}, {})", labels[a], labels[b], labels[c]));
                        }
                    }
                }
            }
        }
        Ok(TableGroup { labels, table: flat, identity })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|x| self.mul(z, x) == self.mul(x, z))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Elements of the subgroup generated by `gens`, as a membership mask.
    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// Table of the dihedral group of order `2n`; element `i + n*j` is `r^i s^j`.
pub fn dihedral_table(n: usize) -> TableGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut labels = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..n {
            labels.push(format!("r{i}s{j}"));
        }
    }
    let table = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            (0..order)
                .map(|y| {
                    let (k, l) = (y % n, y / n);
                    // s r^k = r^-k s
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                    rot + n * ((j + l) % 2)
                })
                .collect()
        })
        .collect();
    TableGroup::new(labels, table).expect("dihedral table is a group")
}

/// Table of the dicyclic group of order `4n`; element `i + 2n*j` is `a^i b^j`
/// with `b² = a^n` and `b a b⁻¹ = a⁻¹`.
pub fn dicyclic_table(n: usize) -> TableGroup {
    assert!(n >= 1);
    let m = 2 * n;
    let order = 2 * m;
    let mut labels = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..m {
            labels.push(format!("a{i}b{j}"));
        }
    }
    let table = (0..order)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            (0..order)
                .map(|y| {
                    let (k, l) = (y % m, y / m);
                    if j == 0 {
                        (i + k) % m + m * l
                    } else if l == 0 {
                        (i + m - k) % m + m
                    } else {
                        (i + m - k + n) % m
                    }
                })
                .collect()
        })
        .collect();
    TableGroup::new(labels, table).expect("dicyclic table is a group")
}

/// `(A × B) / ⟨(za, zb)⟩`.
///
/// Returns the product table together with the index of the image of `za`
/// (equivalently `zb`), which is again central of order 2.
pub fn central_product(
    a: &TableGroup,
    za: usize,
    b: &TableGroup,
    zb: usize,
) -> Result<(TableGroup, usize), ConstructError> {
    for (g, z, name) in [(a, za, "A"), (b, zb, "B")] {
        if z >= g.order() || z == g.identity() || g.mul(z, z) != g.identity() || !g.is_central(z) {
            return Err(ConstructError::InvalidParameter(format!(
                "central product: element {z} of {name} is not central of order 2"
            )));
        }
    }
    let nb = b.order();
    let pair = |x: usize, y: usize| x * nb + y;
    let canonical = |x: usize, y: usize| pair(x, y).min(pair(a.mul(x, za), b.mul(y, zb)));
    let total = a.order() * nb;
    let mut coset = vec![usize::MAX; total];
    let mut reps = Vec::with_capacity(total / 2);
    for p in 0..total {
        let c = canonical(p / nb, p % nb);
        if coset[c] == usize::MAX {
            coset[c] = reps.len();
            reps.push(c);
        }
    }
    let index = |x: usize, y: usize| coset[canonical(x, y)];
    let labels = reps.iter().map(|&p| format!("{}*{}", a.labels()[p / nb], b.labels()[p % nb])).collect();
    let table = reps
        .iter()
        .map(|&p| {
            let (x1, y1) = (p / nb, p % nb);
            reps.iter().map(|&q| index(a.mul(x1, q / nb), b.mul(y1, q % nb))).collect()
        })
        .collect();
    let group = TableGroup::new(labels, table)?;
    Ok((group, index(za, b.identity())))
}

/// Left-regular action of a table group on its own element indices.
///
/// The generating set is chosen greedily in index order: an element is kept
/// when it is not already in the subgroup generated by the earlier choices.
pub fn regular_representation(t: &TableGroup, cap: usize) -> Result<GroupElements, ConstructError> {
    let n = t.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = t.closure(&gens);
    for g in 0..n {
        if !reached[g] {
            gens.push(g);
            reached = t.closure(&gens);
        }
    }
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|&g| Permutation::from_images_unchecked((0..n).map(|x| t.mul(g, x) as u32).collect()))
        .collect();
    Ok(GroupElements::generate(n, &perms, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let d8 = dihedral_table(4);
        assert_eq!(d8.order(), 8);
        assert_eq!((0..8).filter(|&x| d8.element_order(x) == 2).count(), 5);
        let q8 = dicyclic_table(2);
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        let dic12 = dicyclic_table(3);
        assert_eq!(dic12.order(), 12);
        assert_eq!((0..12).map(|x| dic12.element_order(x)).max(), Some(6));
        assert_eq!((0..12).filter(|&x| dic12.element_order(x) == 4).count(), 6);
    }

    #[test]
    fn rejects_non_groups() {
        let labels = vec!["e".to_string(), "x".to_string()];
        assert!(TableGroup::new(labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(TableGroup::new(labels, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn central_products() {
        let d8 = dihedral_table(4);
        let z = 2; // r^2
        let (g, zc) = central_product(&d8, z, &d8, z).unwrap();
        assert_eq!(g.order(), 32);
        assert!(g.is_central(zc));
        assert_eq!(g.element_order(zc), 2);
        // s is not central.
        assert!(central_product(&d8, 4, &d8, z).is_err());
        // The identity is rejected.
        assert!(central_product(&d8, 0, &d8, z).is_err());
    }

    #[test]
    fn regular_rep_of_dic12() {
        let g = regular_representation(&dicyclic_table(3), 100).unwrap();
        assert_eq!(g.degree(), 12);
        assert_eq!(g.order(), 12);
        assert_eq!(g.exponent(), 12);
    }
}
