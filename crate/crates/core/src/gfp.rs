//! Exact arithmetic over prime fields and small integer polynomials.
//!
//! Residues are stored as `u64` in `[0, p)`. Moduli are restricted to primes
//! below 2^31 so that a product of two residues always fits in 64 bits.

use thiserror::Error;

/// Exclusive upper bound on prime-field moduli.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfpError {
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("{e} does not divide {p} - 1")]
    NoRootOfUnity { e: u64, p: u64 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("eigenspaces of the restricted operator span {found} of {expected} dimensions")]
    InvariantViolation { found: usize, expected: usize },
}

fn mul_mod_u128(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus`. Works for any modulus, prime or not.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = base % modulus;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, modulus);
        }
        base = mul_mod_u128(base, base, modulus);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Distinct prime factors of `n` by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `n = q^k` for a prime `q` and `k >= 1`, returns `(q, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(n);
    if factors.len() != 1 {
        return None;
    }
    let q = factors[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= q;
        k += 1;
    }
    Some((q, k))
}

/// Euler's totient by trial factorization.
pub fn totient(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

fn check_modulus(p: u64) -> Result<(), GfpError> {
    if p >= MAX_MODULUS || !is_prime(p) {
        return Err(GfpError::BadModulus(p));
    }
    Ok(())
}

/// Square root of `a` modulo the odd prime `p` by Tonelli-Shanks.
///
/// Returns the smaller of the two roots, or `None` for a non-residue. The
/// auxiliary non-square is the least quadratic non-residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1).expect("an odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod_u128(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod_u128(b, b, p);
        t = mul_mod_u128(t, c, p);
        r = mul_mod_u128(r, b, p);
    }
    Some(r.min(p - r))
}

/// Least primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> Result<u64, GfpError> {
    check_modulus(p)?;
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    Ok((2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots"))
}

/// A primitive `e`-th root of unity in GF(p): `primitive_root(p)^((p-1)/e)`.
pub fn root_of_unity(p: u64, e: u64) -> Result<u64, GfpError> {
    check_modulus(p)?;
    if e == 0 || !(p - 1).is_multiple_of(e) {
        return Err(GfpError::NoRootOfUnity { e, p });
    }
    Ok(pow_mod(primitive_root(p)?, (p - 1) / e, p))
}

/// Coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i64> {
    assert!(e >= 1, "cyclotomic index must be positive");
    let divisors: Vec<u64> = (1..=e).filter(|d| e.is_multiple_of(*d)).collect();
    let mut known: Vec<(u64, Vec<i64>)> = Vec::with_capacity(divisors.len());
    for &n in &divisors {
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for (d, phi) in &known {
            if n % d == 0 {
                num = div_exact_monic(&num, phi);
            }
        }
        known.push((n, num));
    }
    known.pop().expect("e has at least one divisor").1
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Remainder of an integer polynomial modulo a monic polynomial.
pub fn rem_monic(poly: &[i64], modulus: &[i64]) -> Vec<i64> {
    let dm = modulus.len() - 1;
    assert_eq!(modulus[dm], 1, "modulus must be monic");
    let terms: Vec<(usize, i64)> = modulus.iter().copied().enumerate().filter(|&(_, m)| m != 0).collect();
    let mut rem = poly.to_vec();
    if rem.len() > dm {
        for i in (dm..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                for &(j, mj) in &terms {
                    rem[i - dm + j] -= c * mj;
                }
            }
        }
    }
    rem.truncate(dm);
    rem.resize(dm, 0);
    rem
}

/// Dense matrix over GF(p), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of arbitrary integers, reducing them mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self, GfpError> {
        check_modulus(p)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(GfpError::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        Ok(FpMatrix { p, rows: rows.len(), cols, data })
    }

    pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c) % p;
            }
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a * b) % self.p)).collect()
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (FpMatrix, usize) {
        let (m, pivots) = self.rref_pivots();
        (m, pivots.len())
    }

    fn rref_pivots(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = inv_mod(m.get(row, col), p).expect("nonzero residue is invertible");
            for c in col..m.cols {
                let v = m.get(row, c) * inv % p;
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col);
                if f == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = f * m.get(row, c) % p;
                    let v = (m.get(r, c) + p - sub) % p;
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Right nullspace `{ v : M v = 0 }`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref_pivots();
        let p = self.p;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - r.get(i, free)) % p;
            }
            basis.push(v);
        }
        Subspace::from_vectors(p, self.cols, basis)
    }
}

/// A subspace of GF(p)^n held as an RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u64,
    ambient: usize,
    basis: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn full(p: u64, n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { p, ambient: n, basis }
    }

    /// Span of arbitrary vectors; the stored basis is brought to RREF.
    pub fn from_vectors(p: u64, n: usize, vectors: Vec<Vec<u64>>) -> Self {
        if vectors.is_empty() {
            return Subspace { p, ambient: n, basis: Vec::new() };
        }
        let m =
            FpMatrix { p, rows: vectors.len(), cols: n, data: vectors.into_iter().flatten().map(|x| x % p).collect() };
        let (r, rank) = m.rref();
        let basis = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { p, ambient: n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    fn pivot_columns(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.iter().position(|&x| x != 0).expect("basis rows are nonzero")).collect()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut rest: Vec<u64> = v.iter().map(|x| x % p).collect();
        for (b, pc) in self.basis.iter().zip(self.pivot_columns()) {
            let f = rest[pc];
            if f != 0 {
                for (r, &bx) in rest.iter_mut().zip(b) {
                    *r = (*r + p - f * bx % p) % p;
                }
            }
        }
        rest.iter().all(|&x| x == 0)
    }
}

/// Reduces a square matrix to upper Hessenberg form `H = S A S⁻¹` by
/// elementary similarities, returning `H` and `S⁻¹` as dense rows.
fn hessenberg(mut a: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let s = a.len();
    let mut sinv: Vec<Vec<u64>> = (0..s).map(|i| (0..s).map(|j| u64::from(i == j)).collect()).collect();
    for k in 0..s.saturating_sub(2) {
        let Some(r) = (k + 1..s).find(|&r| a[r][k] != 0) else {
            continue;
        };
        if r != k + 1 {
            a.swap(r, k + 1);
            for row in a.iter_mut().chain(sinv.iter_mut()) {
                row.swap(r, k + 1);
            }
        }
        let pivot_inv = inv_mod(a[k + 1][k], p).expect("nonzero pivot");
        for i in k + 2..s {
            if a[i][k] == 0 {
                continue;
            }
            let f = a[i][k] * pivot_inv % p;
            // Row i -= f * row (k+1), then column (k+1) += f * column i.
            let (head, tail) = a.split_at_mut(i);
            for (x, &y) in tail[0].iter_mut().zip(&head[k + 1]) {
                *x = (*x + p - f * y % p) % p;
            }
            for row in a.iter_mut().chain(sinv.iter_mut()) {
                row[k + 1] = (row[k + 1] + f * row[i]) % p;
            }
        }
    }
    (a, sinv)
}

/// Characteristic polynomial of an upper Hessenberg matrix, coefficients from
/// the constant term up, monic of degree `s`.
fn hessenberg_charpoly(h: &[Vec<u64>], p: u64) -> Vec<u64> {
    let s = h.len();
    // polys[m] is the characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..s {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - h[m][m] * c % p) % p;
        }
        let mut sub = 1u64;
        for i in (0..m).rev() {
            sub = sub * h[i + 1][i] % p;
            if sub == 0 {
                break;
            }
            let t = h[i][m] * sub % p;
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + p - t * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Null vector of `H - λI` for unreduced upper Hessenberg `H`, with last
/// coordinate 1.
fn hessenberg_null_vector(h: &[Vec<u64>], lambda: u64, p: u64) -> Vec<u64> {
    let s = h.len();
    let mut x = vec![0u64; s];
    x[s - 1] = 1;
    for i in (1..s).rev() {
        let mut acc = 0u64;
        for j in i..s {
            let a = if i == j { (h[i][j] + p - lambda) % p } else { h[i][j] };
            acc = (acc + a * x[j]) % p;
        }
        let sub_inv = inv_mod(h[i][i - 1], p).expect("unreduced");
        x[i - 1] = (p - acc) % p * sub_inv % p;
    }
    x
}

/// Splits an `M`-invariant subspace into the eigenspaces of `M` restricted to it.
///
/// Candidate eigenvalues are the roots in GF(p) of the characteristic
/// polynomial of the restriction, taken in increasing order, so the output is
/// sorted by eigenvalue. The dimensions must add up to `dim S`; anything else
/// means the restriction is not diagonalizable over GF(p) or `S` was not
/// invariant.
pub fn eigen_split(space: &Subspace, m: &FpMatrix) -> Result<Vec<(u64, Subspace)>, GfpError> {
    let p = space.p;
    let n = space.ambient;
    if m.p != p || m.rows != n || m.cols != n {
        return Err(GfpError::Dimension(format!(
            "{}x{} matrix mod {} against subspace of GF({})^{}",
            m.rows, m.cols, m.p, p, n
        )));
    }
    let s = space.dim();
    if s == 0 {
        return Ok(Vec::new());
    }
    let images: Vec<Vec<u64>> = space.basis.iter().map(|b| m.mul_vec(b)).collect();
    let pivots = space.pivot_columns();
    // Coordinates of M b_r in the RREF basis are read off at the pivot columns.
    let restricted: Vec<Vec<u64>> = (0..s).map(|row| (0..s).map(|col| images[col][pivots[row]]).collect()).collect();
    let (h, sinv) = hessenberg(restricted.clone(), p);
    let charpoly = hessenberg_charpoly(&h, p);
    // With every subdiagonal entry nonzero each eigenspace is a line.
    let unreduced = (1..s).all(|i| h[i][i - 1] != 0);

    let mut out = Vec::new();
    let mut found = 0;
    for lambda in (0..p).filter(|&l| eval_poly(&charpoly, l, p) == 0) {
        let coords: Vec<Vec<u64>> = if unreduced {
            let x = hessenberg_null_vector(&h, lambda, p);
            vec![(0..s).map(|r| (0..s).fold(0, |acc, c| (acc + sinv[r][c] * x[c]) % p)).collect()]
        } else {
            FpMatrix::from_fn(p, s, s, |r, c| {
                let v = restricted[r][c];
                if r == c {
                    (v + p - lambda) % p
                } else {
                    v
                }
            })
            .nullspace()
            .basis
        };
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u64; n];
                for (c, b) in coeffs.iter().zip(&space.basis) {
                    if *c == 0 {
                        continue;
                    }
                    for (x, &bx) in v.iter_mut().zip(b) {
                        *x = (*x + c * bx) % p;
                    }
                }
                v
            })
            .collect();
        for v in &vectors {
            let mv = m.mul_vec(v);
            if mv.iter().zip(v).any(|(&a, &b)| a != lambda * b % p) {
                return Err(GfpError::InvariantViolation { found, expected: s });
            }
        }
        found += vectors.len();
        out.push((lambda, Subspace::from_vectors(p, n, vectors)));
        if found == s {
            break;
        }
    }
    if found != s {
        return Err(GfpError::InvariantViolation { found, expected: s });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_rank_one() {
        let m = FpMatrix::from_rows(3, &[vec![1, 1], vec![1, 1]]).unwrap();
        let (_, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(m.nullspace().basis(), &[vec![1, 2]]);
    }

    #[test]
    fn identity_and_zero() {
        let id = FpMatrix::identity(5, 4);
        assert_eq!(id.rref().1, 4);
        assert_eq!(id.nullspace().dim(), 0);
        let z = FpMatrix::zeros(5, 3, 3);
        assert_eq!(z.rref().1, 0);
        assert_eq!(z.nullspace(), Subspace::full(5, 3));
    }

    #[test]
    fn eigen_split_diagonal() {
        let m = FpMatrix::from_rows(7, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 5]]).unwrap();
        let split = eigen_split(&Subspace::full(7, 3), &m).unwrap();
        let shape: Vec<(u64, usize)> = split.iter().map(|(l, s)| (*l, s.dim())).collect();
        assert_eq!(shape, vec![(2, 2), (5, 1)]);

        let split = eigen_split(&Subspace::full(7, 3), &FpMatrix::identity(7, 3)).unwrap();
        assert_eq!(split.len(), 1);
        assert_eq!(split[0].0, 1);
        assert_eq!(split[0].1, Subspace::full(7, 3));
    }

    #[test]
    fn eigen_split_rejects_jordan_block() {
        let m = FpMatrix::from_rows(5, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(matches!(
            eigen_split(&Subspace::full(5, 2), &m),
            Err(GfpError::InvariantViolation { found: 1, expected: 2 })
        ));
    }

    #[test]
    fn tonelli_shanks_examples() {
        assert_eq!(sqrt_mod(2, 7), Some(3));
        assert_eq!(sqrt_mod(3, 7), None);
        // 41 - 1 = 8 * 5 exercises the inner loop.
        for a in 1..41 {
            if let Some(r) = sqrt_mod(a, 41) {
                assert_eq!(r * r % 41, a);
            }
        }
    }

    #[test]
    fn roots() {
        assert_eq!(primitive_root(13).unwrap(), 2);
        assert_eq!(root_of_unity(13, 12).unwrap(), 2);
        assert_eq!(root_of_unity(13, 5), Err(GfpError::NoRootOfUnity { e: 5, p: 13 }));
        assert_eq!(primitive_root(15), Err(GfpError::BadModulus(15)));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn reduction_mod_cyclotomic() {
        // 1 + x + x^2 vanishes mod the third cyclotomic polynomial.
        assert_eq!(rem_monic(&[1, 1, 1], &cyclotomic_polynomial(3)), vec![0, 0]);
        assert_eq!(rem_monic(&[5], &cyclotomic_polynomial(4)), vec![5, 0]);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(totient(9), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
    }

    fn small_prime() -> impl Strategy<Value = u64> {
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_nullspace_annihilated(
            p in small_prime(),
            rows in 1usize..=5,
            cols in 1usize..=5,
            seed in prop::collection::vec(0i64..1000, 25),
        ) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| seed[r * 5 + c]).collect())
                .collect();
            let m = FpMatrix::from_rows(p, &data).unwrap();
            let (r, rank) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), rank));
            let ns = m.nullspace();
            prop_assert_eq!(rank + ns.dim(), cols);
            for v in ns.basis() {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn charpoly_roots_are_singular_shifts(
            p in small_prime(),
            n in 1usize..=5,
            seed in prop::collection::vec(0u64..13, 25),
        ) {
            let a: Vec<Vec<u64>> = (0..n).map(|r| (0..n).map(|c| seed[r * 5 + c] % p).collect()).collect();
            let (h, sinv) = hessenberg(a.clone(), p);
            prop_assert!((0..n).all(|r| (0..r.saturating_sub(1)).all(|c| h[r][c] == 0)));
            let cp = hessenberg_charpoly(&h, p);
            prop_assert_eq!(cp.len(), n + 1);
            prop_assert_eq!(cp[n], 1);
            for lambda in 0..p {
                let shifted = FpMatrix::from_fn(p, n, n, |r, c| (a[r][c] + if r == c { p - lambda } else { 0 }) % p);
                let singular = shifted.rref().1 < n;
                prop_assert_eq!(eval_poly(&cp, lambda, p) == 0, singular);
                if singular && (1..n).all(|i| h[i][i - 1] != 0) {
                    let x = hessenberg_null_vector(&h, lambda, p);
                    let y: Vec<u64> = (0..n).map(|r| (0..n).fold(0, |acc, c| (acc + sinv[r][c] * x[c]) % p)).collect();
                    let ay: Vec<u64> = (0..n).map(|r| (0..n).fold(0, |acc, c| (acc + a[r][c] * y[c]) % p)).collect();
                    prop_assert_eq!(ay, y.iter().map(|v| v * lambda % p).collect::<Vec<_>>());
                }
            }
        }

        #[test]
        fn eigen_blocks_are_invariant(
            p in prop::sample::select(vec![5u64, 7, 11, 13]),
            diag in prop::collection::vec(0u64..13, 4),
            seed in prop::collection::vec(0i64..13, 16),
        ) {
            // Conjugate a diagonal matrix by a random invertible one.
            let n = 4;
            let raw: Vec<Vec<i64>> = (0..n).map(|r| seed[r * n..(r + 1) * n].to_vec()).collect();
            let q = FpMatrix::from_rows(p, &raw).unwrap();
            prop_assume!(q.rref().1 == n);
            let qinv = invert(&q);
            let d = FpMatrix::from_fn(p, n, n, |r, c| if r == c { diag[r] } else { 0 });
            let m = matmul(&matmul(&q, &d), &qinv);
            let split = eigen_split(&Subspace::full(p, n), &m).unwrap();
            prop_assert_eq!(split.iter().map(|(_, s)| s.dim()).sum::<usize>(), n);
            for (_, block) in &split {
                for v in block.basis() {
                    prop_assert!(block.contains(&m.mul_vec(v)));
                }
            }
        }

        #[test]
        fn sqrt_roots_square_back(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 97, 101, 257]), a in 0u64..1000) {
            if let Some(r) = sqrt_mod(a, p) {
                prop_assert_eq!(r * r % p, a % p);
                prop_assert!(2 * r < p);
            }
        }
    }

    #[test]
    fn cyclotomic_vanishes_at_roots_of_unity() {
        for p in (3..100).filter(|&p| is_prime(p)) {
            for e in (1..p).filter(|e| (p - 1) % e == 0) {
                let z = root_of_unity(p, e).unwrap();
                let phi = cyclotomic_polynomial(e);
                let val = phi.iter().rev().fold(0i64, |acc, &c| (acc * z as i64 + c).rem_euclid(p as i64));
                assert_eq!(val, 0, "Phi_{e} at root mod {p}");
            }
        }
    }

    fn matmul(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
        let p = a.modulus();
        FpMatrix::from_fn(p, a.rows(), b.cols(), |r, c| {
            (0..a.cols()).fold(0, |acc, k| (acc + a.get(r, k) * b.get(k, c)) % p)
        })
    }

    fn invert(m: &FpMatrix) -> FpMatrix {
        let n = m.rows();
        let p = m.modulus();
        let aug = FpMatrix::from_fn(p, n, 2 * n, |r, c| {
            if c < n {
                m.get(r, c)
            } else if c - n == r {
                1
            } else {
                0
            }
        });
        let (r, _) = aug.rref();
        FpMatrix::from_fn(p, n, n, |i, j| r.get(i, n + j))
    }
}
