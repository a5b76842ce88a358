//! Text grammar for naming groups.
//!
//! ```text
//! spec := "cyclic:" INT | "elemab:" P "^" INT | "abelian:" INT ("x" INT)*
//!       | "dihedral:" INT | "dicyclic:" INT | "sym:" INT | "alt:" INT
//!       | "frobenius:" P "^" INT ":" INT | "extraspecial:2^" INT ":" ("+" | "-")
//!       | "psl2:" P | "c3c3q8" | "direct:(" spec ")*(" spec ")" | "perm:" FILE
//! ```
//!
//! `dihedral:n` has order `2n`, `dicyclic:n` order `4n`, and
//! `extraspecial:2^k` order `2^k` for odd `k ≥ 3`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use super::{
    abelian, alternating, check_cap, cyclic, dicyclic, dihedral, direct_product, elementary_abelian, extraspecial,
    frobenius_field, psl2, q8_on_c3c3, symmetric, ConstructError,
};
use crate::catalog::CatalogEntry;
use crate::gfp::is_prime;
use crate::permgrp::GroupElements;

const MAX_NESTING: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown group family `{name}` at byte {pos}")]
    UnknownFamily { pos: usize, name: String },
    #[error("parameter error at byte {pos}: {msg}")]
    Parameter { pos: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtraspecialSign {
    Plus,
    Minus,
}

/// A parsed group name. Parameters are validated against their family's
/// constraints at parse time; the order cap is applied by [`GroupSpec::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    ElementaryAbelian {
        p: u64,
        beta: u32,
    },
    Abelian(Vec<u64>),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Frobenius {
        p: u64,
        beta: u32,
        m: u64,
    },
    /// Order `2^(2n+1)`.
    Extraspecial {
        n: u32,
        sign: ExtraspecialSign,
    },
    Psl2(u64),
    C3c3Q8,
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    Perm(PathBuf),
}

impl GroupSpec {
    /// Order implied by the parameters, saturating on overflow. `None` for
    /// groups read from a file.
    pub fn expected_order(&self) -> Option<u128> {
        use GroupSpec::*;
        let fact = |n: u64| (1..=n as u128).fold(1u128, |a, k| a.saturating_mul(k));
        Some(match self {
            Cyclic(n) => *n as u128,
            ElementaryAbelian { p, beta } => (*p as u128).saturating_pow(*beta),
            Abelian(f) => f.iter().fold(1u128, |a, &x| a.saturating_mul(x as u128)),
            Dihedral(n) => 2 * *n as u128,
            Dicyclic(n) => 4 * *n as u128,
            Symmetric(n) => fact(*n),
            Alternating(n) => (fact(*n) / 2).max(1),
            Frobenius { p, beta, m } => (*p as u128).saturating_pow(*beta).saturating_mul(*m as u128),
            Extraspecial { n, .. } => 2u128.saturating_pow(2 * n + 1),
            Psl2(q) => {
                let q = *q as u128;
                q.saturating_mul(q.saturating_mul(q) - 1) / 2
            }
            C3c3Q8 => 72,
            Direct(a, b) => a.expected_order()?.saturating_mul(b.expected_order()?),
            Perm(_) => return None,
        })
    }

    /// True if the spec (or any factor) reads a file.
    pub fn reads_files(&self) -> bool {
        match self {
            GroupSpec::Perm(_) => true,
            GroupSpec::Direct(a, b) => a.reads_files() || b.reads_files(),
            _ => false,
        }
    }

    pub fn build(&self, cap: usize) -> Result<GroupElements, ConstructError> {
        if let Some(order) = self.expected_order() {
            check_cap(order, cap)?;
        }
        use GroupSpec::*;
        match self {
            Cyclic(n) => cyclic(*n, cap),
            ElementaryAbelian { p, beta } => elementary_abelian(*p, *beta, cap),
            Abelian(f) => abelian(f, cap),
            Dihedral(n) => dihedral(*n, cap),
            Dicyclic(n) => dicyclic(*n, cap),
            Symmetric(n) => symmetric(*n, cap),
            Alternating(n) => alternating(*n, cap),
            Frobenius { p, beta, m } => frobenius_field(*p, *beta, *m, cap),
            Extraspecial { n, sign } => extraspecial(*n, *sign, cap),
            Psl2(q) => psl2(*q, cap),
            C3c3Q8 => q8_on_c3c3(cap),
            Direct(a, b) => direct_product(&a.build(cap)?, &b.build(cap)?, cap),
            Perm(path) => {
                let fail = |reason: String| ConstructError::PermFile { path: path.display().to_string(), reason };
                let text = std::fs::read_to_string(path).map_err(|e| fail(e.to_string()))?;
                let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| fail("file is empty".into()))?;
                let entry = CatalogEntry::parse_line(line).map_err(|e| fail(e.to_string()))?;
                entry.to_group(cap).map_err(|e| match e {
                    crate::catalog::CatalogError::Perm(p) => ConstructError::Perm(p),
                    other => fail(other.to_string()),
                })
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "cyclic:{n}"),
            ElementaryAbelian { p, beta } => write!(f, "elemab:{p}^{beta}"),
            Abelian(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "abelian:{}", parts.join("x"))
            }
            Dihedral(n) => write!(f, "dihedral:{n}"),
            Dicyclic(n) => write!(f, "dicyclic:{n}"),
            Symmetric(n) => write!(f, "sym:{n}"),
            Alternating(n) => write!(f, "alt:{n}"),
            Frobenius { p, beta, m } => write!(f, "frobenius:{p}^{beta}:{m}"),
            Extraspecial { n, sign } => {
                let s = match sign {
                    ExtraspecialSign::Plus => '+',
                    ExtraspecialSign::Minus => '-',
                };
                write!(f, "extraspecial:2^{}:{s}", 2 * n + 1)
            }
            Psl2(q) => write!(f, "psl2:{q}"),
            C3c3Q8 => write!(f, "c3c3q8"),
            Direct(a, b) => write!(f, "direct:({a})*({b})"),
            Perm(path) => write!(f, "perm:{}", path.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

/// Parses a complete spec string.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut parser = Parser { src: text, pos: 0 };
    let spec = parser.spec(0)?;
    if parser.pos != text.len() {
        return Err(parser.syntax("trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn syntax(&self, msg: impl Into<String>) -> SpecError {
        SpecError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, token: &str) -> Result<(), SpecError> {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{token}`")))
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax("expected an integer"));
        }
        let value = self.rest()[..digits].parse::<u64>().map_err(|_| self.syntax("integer too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn small_int(&mut self) -> Result<u32, SpecError> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| SpecError::Syntax { pos: at, msg: "exponent too large".into() })
    }

    fn prime(&mut self) -> Result<u64, SpecError> {
        let at = self.pos;
        let p = self.int()?;
        if !is_prime(p) {
            return Err(SpecError::Parameter { pos: at, msg: format!("{p} is not prime") });
        }
        Ok(p)
    }

    fn positive(&mut self) -> Result<u64, SpecError> {
        let at = self.pos;
        let n = self.int()?;
        if n == 0 {
            return Err(SpecError::Parameter { pos: at, msg: "parameter must be positive".into() });
        }
        Ok(n)
    }

    fn spec(&mut self, depth: usize) -> Result<GroupSpec, SpecError> {
        if depth > MAX_NESTING {
            return Err(self.syntax("direct products nested too deeply"));
        }
        let start = self.pos;
        let name_len = self.rest().bytes().take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit()).count();
        let name = &self.src[start..start + name_len];
        self.pos += name_len;
        if name == "c3c3q8" {
            return Ok(GroupSpec::C3c3Q8);
        }
        let known = [
            "cyclic",
            "elemab",
            "abelian",
            "dihedral",
            "dicyclic",
            "sym",
            "alt",
            "frobenius",
            "extraspecial",
            "psl2",
            "direct",
            "perm",
        ];
        if !known.contains(&name) {
            return Err(SpecError::UnknownFamily { pos: start, name: name.to_string() });
        }
        self.expect(":")?;
        Ok(match name {
            "cyclic" => GroupSpec::Cyclic(self.positive()?),
            "elemab" => {
                let p = self.prime()?;
                self.expect("^")?;
                let at = self.pos;
                let beta = self.small_int()?;
                if beta == 0 {
                    return Err(SpecError::Parameter { pos: at, msg: "β must be positive".into() });
                }
                GroupSpec::ElementaryAbelian { p, beta }
            }
            "abelian" => {
                let mut factors = vec![self.positive()?];
                while self.rest().starts_with('x') {
                    self.pos += 1;
                    factors.push(self.positive()?);
                }
                GroupSpec::Abelian(factors)
            }
            "dihedral" => GroupSpec::Dihedral(self.positive()?),
            "dicyclic" => GroupSpec::Dicyclic(self.positive()?),
            "sym" => GroupSpec::Symmetric(self.positive()?),
            "alt" => GroupSpec::Alternating(self.positive()?),
            "frobenius" => {
                let p = self.prime()?;
                self.expect("^")?;
                let beta_at = self.pos;
                let beta = self.small_int()?;
                self.expect(":")?;
                let m_at = self.pos;
                let m = self.int()?;
                if beta == 0 {
                    return Err(SpecError::Parameter { pos: beta_at, msg: "β must be positive".into() });
                }
                let q = (p as u128)
                    .checked_pow(beta)
                    .ok_or(SpecError::Parameter { pos: beta_at, msg: format!("{p}^{beta} is too large") })?;
                if m < 2 || (q - 1) % m as u128 != 0 {
                    return Err(SpecError::Parameter {
                        pos: m_at,
                        msg: format!("m = {m} must be at least 2 and divide {p}^{beta} - 1"),
                    });
                }
                GroupSpec::Frobenius { p, beta, m }
            }
            "extraspecial" => {
                self.expect("2^")?;
                let at = self.pos;
                let k = self.small_int()?;
                if k < 3 || k % 2 == 0 {
                    return Err(SpecError::Parameter {
                        pos: at,
                        msg: format!("extraspecial 2-groups have order 2^k with odd k ≥ 3, got k = {k}"),
                    });
                }
                self.expect(":")?;
                let sign = match self.rest().as_bytes().first() {
                    Some(b'+') => ExtraspecialSign::Plus,
                    Some(b'-') => ExtraspecialSign::Minus,
                    _ => return Err(self.syntax("expected `+` or `-`")),
                };
                self.pos += 1;
                GroupSpec::Extraspecial { n: (k - 1) / 2, sign }
            }
            "psl2" => {
                let at = self.pos;
                let q = self.prime()?;
                if q < 5 {
                    return Err(SpecError::Parameter { pos: at, msg: "psl2 needs q ≥ 5".into() });
                }
                GroupSpec::Psl2(q)
            }
            "direct" => {
                self.expect("(")?;
                let a = self.spec(depth + 1)?;
                self.expect(")*(")?;
                let b = self.spec(depth + 1)?;
                self.expect(")")?;
                GroupSpec::Direct(Box::new(a), Box::new(b))
            }
            "perm" => {
                let len = self.rest().find(')').unwrap_or(self.rest().len());
                if len == 0 {
                    return Err(self.syntax("expected a file name"));
                }
                let path = PathBuf::from(&self.rest()[..len]);
                self.pos += len;
                GroupSpec::Perm(path)
            }
            _ => unreachable!("family list checked above"),
        })
    }
}
