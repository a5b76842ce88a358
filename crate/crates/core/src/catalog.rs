//! JSON-lines catalog of permutation groups.
//!
//! One object per line:
//!
//! ```json
//! {"name":"S3","degree":3,"generators":[[[0,1]],[[0,1,2]]]}
//! ```
//!
//! Each generator is a list of disjoint cycles. An optional `expected` block
//! pins the classification for regression runs, e.g.
//! `{"verdict":"TkPrime","k":2,"d0":8,"case":"B1"}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codegree::{Classification, TheoremCase};
use crate::permgrp::{GroupElements, PermError, Permutation};

/// Entries declaring more points than this are rejected.
pub const MAX_DEGREE: usize = 1 << 14;
/// Entries with more generators than this are rejected.
pub const MAX_GENERATORS: usize = 256;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid entry: {0}")]
    Invalid(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(flatten)]
    pub classification: Classification,
    pub case: TheoremCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    /// Parses and validates one catalog line. Cycle disjointness and point
    /// ranges are checked here so that [`CatalogEntry::to_group`] only has
    /// the closure left to fail.
    pub fn parse_line(line: &str) -> Result<Self, CatalogError> {
        let entry: CatalogEntry = serde_json::from_str(line).map_err(|e| CatalogError::Json(e.to_string()))?;
        entry.validate()?;
        Ok(entry)
    }

    fn validate(&self) -> Result<(), CatalogError> {
        if self.degree == 0 || self.degree > MAX_DEGREE {
            return Err(CatalogError::Invalid(format!("degree {} outside 1..={MAX_DEGREE}", self.degree)));
        }
        if self.generators.len() > MAX_GENERATORS {
            return Err(CatalogError::Invalid(format!(
                "{} generators (at most {MAX_GENERATORS})",
                self.generators.len()
            )));
        }
        for g in &self.generators {
            Permutation::from_cycles(self.degree, g)?;
        }
        Ok(())
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>, CatalogError> {
        self.validate()?;
        Ok(self.generators.iter().map(|g| Permutation::from_cycles(self.degree, g)).collect::<Result<_, _>>()?)
    }

    pub fn to_group(&self, cap: usize) -> Result<GroupElements, CatalogError> {
        Ok(GroupElements::generate(self.degree, &self.permutations()?, cap)?)
    }

    /// Entry describing `group` by its stored generators.
    pub fn from_group(name: impl Into<String>, group: &GroupElements) -> Self {
        CatalogEntry {
            name: name.into(),
            degree: group.degree(),
            generators: group.generators().map(Permutation::cycles).collect(),
            expected: None,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("catalog entries serialize")
    }
}

/// Splits catalog text into entries, keeping the 1-based line number of each.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_catalog(text: &str) -> Vec<(usize, Result<CatalogEntry, CatalogError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| (i + 1, CatalogEntry::parse_line(l)))
        .collect()
}
