//! End-to-end analysis of one group and its serialisable report.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::CatalogError;
use crate::chartab::{character_table_with, verify_orthogonality, CharacterTable, ChartabError, TableOptions};
use crate::codegree::{
    check_abelian_order_law, check_lemma_small_b, check_lemma_small_c, classify_tk, classify_tkprime, codegree_profile,
    codegrees, degree_profile, dihedral_codegree_count_check, dprime_n, match_theorem_case, normal_subgroup_lattice,
    Classification, CodegreeError, CodegreeProfile, LemmaViolation, TheoremCase, TkVerdict,
};
use crate::constructors::ConstructError;
use crate::permgrp::GroupElements;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Table(#[from] ChartabError),
    #[error(transparent)]
    Codegree(#[from] CodegreeError),
}

impl AnalysisError {
    pub fn is_cap_exceeded(&self) -> bool {
        match self {
            AnalysisError::Construct(e) => e.is_cap_exceeded(),
            AnalysisError::Catalog(CatalogError::Perm(e)) => {
                matches!(e, crate::permgrp::PermError::ClosureExceedsCap { .. })
            }
            _ => false,
        }
    }

    /// Malformed input as opposed to a failure inside the pipeline.
    pub fn is_input_error(&self) -> bool {
        match self {
            AnalysisError::Construct(e) => !e.is_cap_exceeded(),
            AnalysisError::Catalog(_) => !self.is_cap_exceeded(),
            _ => false,
        }
    }
}

/// A group together with everything computed about it.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub name: String,
    pub group: GroupElements,
    pub table: CharacterTable,
    pub codegrees: Vec<u64>,
    pub profile: CodegreeProfile,
    pub classification: Classification,
    pub tk: TkVerdict,
    pub dprime_n: usize,
    pub case: TheoremCase,
}

pub fn analyze(name: impl Into<String>, group: GroupElements, opts: &TableOptions) -> Result<Analysis, AnalysisError> {
    let table = character_table_with(&group, opts)?;
    let codegrees = codegrees(&table)?;
    let profile = codegree_profile(&table)?;
    let classification = classify_tkprime(&profile);
    let tk = classify_tk(&degree_profile(&table));
    let dprime_n = dprime_n(&table)?;
    let case = match_theorem_case(&group, &table, &classification)?;
    Ok(Analysis { name: name.into(), group, table, codegrees, profile, classification, tk, dprime_n, case })
}

/// Results of the theorem-backed property checks on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResults {
    pub lemma_small_b: Vec<LemmaViolation>,
    pub lemma_small_c: Vec<LemmaViolation>,
    /// `None` for nonabelian groups.
    pub abelian_order_law: Option<bool>,
    /// `None` unless the group was named as a dihedral group `D_2n`, `n` odd.
    pub dihedral_count: Option<bool>,
    pub degree_square_sum: bool,
    pub orthogonality: bool,
}

impl PropertyResults {
    pub fn violations(&self) -> usize {
        self.lemma_small_b.len()
            + self.lemma_small_c.len()
            + usize::from(self.abelian_order_law == Some(false))
            + usize::from(self.dihedral_count == Some(false))
            + usize::from(!self.degree_square_sum)
            + usize::from(!self.orthogonality)
    }
}

/// Runs every property check. `dihedral_n` enables the dihedral count for
/// `D_2n` with `n` odd.
pub fn check_properties(a: &Analysis, dihedral_n: Option<u64>) -> Result<PropertyResults, AnalysisError> {
    let lattice = normal_subgroup_lattice(&a.table);
    let abelian_order_law =
        if a.group.is_abelian() { Some(check_abelian_order_law(&a.table, &a.group)?) } else { None };
    let dihedral_count = match dihedral_n {
        Some(n) if n % 2 == 1 => Some(dihedral_codegree_count_check(n, &a.table)?),
        _ => None,
    };
    let degree_square_sum = a.table.degrees().iter().map(|d| d * d).sum::<u64>() == a.table.order();
    Ok(PropertyResults {
        lemma_small_b: check_lemma_small_b(&a.table, &lattice, &a.group)?,
        lemma_small_c: check_lemma_small_c(&a.table, &lattice)?,
        abelian_order_law,
        dihedral_count,
        degree_square_sum,
        orthogonality: verify_orthogonality(&a.table).is_ok(),
    })
}

/// Machine-readable summary of an [`Analysis`]. Serialised through
/// [`Report::to_json`], keys come out sorted.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub order: u64,
    pub prime: u64,
    pub exponent: u64,
    pub class_sizes: Vec<usize>,
    pub class_rep_orders: Vec<u64>,
    pub degrees: Vec<u64>,
    pub kernel_orders: Vec<u64>,
    pub codegrees: Vec<u64>,
    pub codegree_profile: Vec<[u64; 2]>,
    pub classification: Classification,
    pub tk: TkVerdict,
    pub dprime_n: usize,
    pub theorem_case: TheoremCase,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertyResults>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl Report {
    pub fn new(a: &Analysis) -> Self {
        let classes = a.table.classes();
        Report {
            name: a.name.clone(),
            order: a.table.order(),
            prime: a.table.prime(),
            exponent: a.table.exponent(),
            class_sizes: classes.sizes().to_vec(),
            class_rep_orders: classes.rep_order().to_vec(),
            degrees: a.table.degrees(),
            kernel_orders: a.table.characters().iter().map(|c| c.kernel_order).collect(),
            codegrees: a.codegrees.clone(),
            codegree_profile: a.profile.pairs(),
            classification: a.classification,
            tk: a.tk,
            dprime_n: a.dprime_n,
            theorem_case: a.case,
            properties: None,
            timing_ms: None,
        }
    }

    /// JSON value with every object's keys sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}
