use super::ConstructError;
use crate::gfp::{is_prime, prime_factors};

/// GF(p^β) realised as GF(p)[x] / (f) for a monic irreducible `f` of degree β.
///
/// Elements are addressed by index `Σ c_i p^i` of their coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldGF {
    p: u64,
    beta: u32,
    modulus: Vec<u64>,
    generator: usize,
}

impl FieldGF {
    /// The modulus is the first irreducible monic polynomial when the
    /// non-leading coefficients are enumerated as base-`p` digits of
    /// `0, 1, 2, ...` (constant term least significant). The stored generator
    /// is the least element index of multiplicative order `p^β - 1`.
    pub fn new(p: u64, beta: u32, max_size: usize) -> Result<Self, ConstructError> {
        if !is_prime(p) || beta == 0 {
            return Err(ConstructError::InvalidParameter(format!("GF({p}^{beta}) needs p prime, β ≥ 1")));
        }
        let size = p
            .checked_pow(beta)
            .filter(|&s| s <= max_size as u64)
            .ok_or_else(|| ConstructError::InvalidParameter(format!("GF({p}^{beta}) is too large")))?;
        let mut modulus = None;
        for idx in 0..size {
            let mut f = digits(idx, p, beta);
            f.push(1);
            if is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("irreducible polynomials exist in every degree");
        let mut field = FieldGF { p, beta, modulus, generator: 0 };
        let group_order = size - 1;
        let factors = prime_factors(group_order);
        field.generator = (1..size as usize)
            .find(|&g| factors.iter().all(|&q| field.pow(g, group_order / q) != 1))
            .expect("the multiplicative group is cyclic");
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.beta
    }

    pub fn size(&self) -> usize {
        self.p.pow(self.beta) as usize
    }

    /// Monic modulus, lowest coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    fn to_coeffs(&self, a: usize) -> Vec<u64> {
        digits(a as u64, self.p, self.beta)
    }

    fn index_of_coeffs(&self, c: &[u64]) -> usize {
        c.iter().rev().fold(0u64, |acc, &x| acc * self.p + x) as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.to_coeffs(a), self.to_coeffs(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.index_of_coeffs(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<u64> = self.to_coeffs(a).iter().map(|&u| (self.p - u) % self.p).collect();
        self.index_of_coeffs(&s)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = poly_mul(&self.to_coeffs(a), &self.to_coeffs(b), self.p);
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.beta as usize, 0);
        self.index_of_coeffs(&r)
    }

    pub fn pow(&self, a: usize, mut exp: u64) -> usize {
        let mut base = a;
        let mut acc = 1usize;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: usize) -> u64 {
        assert_ne!(a, 0);
        let n = self.size() as u64 - 1;
        let mut order = n;
        for q in prime_factors(n) {
            while order.is_multiple_of(q) && self.pow(a, order / q) == 1 {
                order /= q;
            }
        }
        order
    }
}

fn digits(mut idx: u64, p: u64, len: u32) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = crate::gfp::inv_mod(m[dm], p).expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * mj % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Distinct-degree test: `f` has no factor of degree `i ≤ deg f / 2`, checked
/// as `gcd(x^(p^i) - x, f) = 1`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    let mut h = vec![0, 1]; // x
    for _ in 1..=deg / 2 {
        // h <- h^p mod f
        let mut acc = vec![1u64];
        for _ in 0..p {
            acc = poly_rem(&poly_mul(&acc, &h, p), f, p);
        }
        h = acc;
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if poly_gcd(f, &diff, p).len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(f: &[u64], p: u64) -> bool {
        // No root and, for degree ≤ 3, that is enough.
        (0..p).all(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) != 0)
    }

    #[test]
    fn irreducibility_agrees_with_root_test_in_low_degree() {
        for p in [2u64, 3, 5] {
            for deg in 2..=3u32 {
                for idx in 0..p.pow(deg) {
                    let mut f = digits(idx, p, deg);
                    f.push(1);
                    assert_eq!(is_irreducible(&f, p), brute_irreducible(&f, p), "{f:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn field_structure() {
        for (p, beta) in [(2u64, 1u32), (2, 3), (2, 5), (3, 2), (5, 2), (7, 1)] {
            let f = FieldGF::new(p, beta, 4096).unwrap();
            let q = f.size();
            assert_eq!(f.element_order(f.generator()), q as u64 - 1);
            // Every nonzero element is invertible.
            for a in 1..q {
                assert!((1..q).any(|b| f.mul(a, b) == 1));
            }
        }
        // GF(4): x^2 + x + 1 is the only irreducible quadratic.
        assert_eq!(FieldGF::new(2, 2, 16).unwrap().modulus(), &[1, 1, 1]);
        assert!(FieldGF::new(4, 1, 16).is_err());
        assert!(FieldGF::new(2, 20, 4096).is_err());
    }

    #[test]
    fn minus_one_is_the_unique_involution_of_gf9() {
        let f = FieldGF::new(3, 2, 100).unwrap();
        let invol: Vec<usize> = (1..9).filter(|&a| f.element_order(a) == 2).collect();
        assert_eq!(invol, vec![f.neg(1)]);
        let g = f.pow(f.generator(), 4);
        assert_eq!(g, f.neg(1));
    }
}
