use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use codegree_core::catalog::{parse_catalog, CatalogEntry};
use codegree_core::chartab::{ChartabError, TableOptions};
use codegree_core::codegree::TheoremCase;
use codegree_core::constructors::{parse_spec, GroupSpec};
use codegree_core::report::{analyze, check_properties as run_checks, Analysis, AnalysisError, Report};
use codegree_core::suite::{builtin_suite, parse_suite, SuiteCase};

use crate::render;
use crate::{Cli, Format, Status};

fn options(cli: &Cli) -> TableOptions {
    TableOptions { prime: cli.prime }
}

fn status_of(err: &AnalysisError) -> Status {
    if err.is_cap_exceeded() {
        Status::Cap
    } else if err.is_input_error() || matches!(err, AnalysisError::Table(ChartabError::BadPrime { .. })) {
        Status::Parse
    } else {
        Status::Internal
    }
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("values serialize")),
        Format::Text => print!("{}", text()),
    }
}

/// Parses, builds and analyses one group spec.
fn analyze_spec(cli: &Cli, text: &str) -> Result<(Analysis, BTreeMap<String, u64>), Status> {
    let spec = parse_spec(text).map_err(|e| {
        eprintln!("error: {e}");
        Status::Parse
    })?;
    analyze_group_spec(cli, &spec).map_err(|e| {
        eprintln!("error: {text}: {e}");
        status_of(&e)
    })
}

fn analyze_group_spec(cli: &Cli, spec: &GroupSpec) -> Result<(Analysis, BTreeMap<String, u64>), AnalysisError> {
    let start = Instant::now();
    let group = spec.build(cli.max_order)?;
    let built = start.elapsed();
    let analysis = analyze(spec.to_string(), group, &options(cli))?;
    let timing = BTreeMap::from([
        ("build".to_string(), built.as_millis() as u64),
        ("total".to_string(), start.elapsed().as_millis() as u64),
    ]);
    Ok((analysis, timing))
}

fn report_for(cli: &Cli, analysis: &Analysis, timing: BTreeMap<String, u64>) -> Report {
    let mut report = Report::new(analysis);
    if cli.timing {
        report.timing_ms = Some(timing);
    }
    report
}

pub fn table(cli: &Cli, spec: &str) -> Status {
    match analyze_spec(cli, spec) {
        Ok((analysis, _)) => {
            emit(cli, &render::table_json(&analysis), || render::table_text(&analysis));
            Status::Ok
        }
        Err(status) => status,
    }
}

pub fn classify(cli: &Cli, spec: &str) -> Status {
    match analyze_spec(cli, spec) {
        Ok((analysis, timing)) => {
            let report = report_for(cli, &analysis, timing);
            emit(cli, &report.to_json(), || render::report_text(&report));
            Status::Ok
        }
        Err(status) => status,
    }
}

pub fn verify_theorem(cli: &Cli, suite_file: Option<&Path>) -> Status {
    let suite: Vec<SuiteCase> = match suite_file {
        None => builtin_suite(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return Status::Parse;
                }
            };
            match parse_suite(&text) {
                Ok(s) => s,
                Err((line, msg)) => {
                    eprintln!("error: {}:{line}: {msg}", path.display());
                    return Status::Parse;
                }
            }
        }
    };
    let mut status = Status::Ok;
    let mut passed = 0;
    for case in &suite {
        let outcome = parse_spec(&case.spec)
            .map_err(|e| (Status::Parse, e.to_string()))
            .and_then(|spec| analyze_group_spec(cli, &spec).map_err(|e| (status_of(&e), e.to_string())));
        match outcome {
            Ok((analysis, _)) => {
                let ok = analysis.classification == case.expected.classification
                    && analysis.case == case.expected.case
                    && analysis.case != TheoremCase::Unexpected;
                if ok {
                    passed += 1;
                } else {
                    status = status.max(Status::Mismatch);
                }
                let value = json!({
                    "spec": case.spec,
                    "pass": ok,
                    "expected": case.expected,
                    "actual": {"classification": analysis.classification, "case": analysis.case},
                    "codegree_profile": analysis.profile.pairs(),
                });
                emit(cli, &value, || {
                    format!(
                        "{} {}: {} {} (expected {} {})\n",
                        if ok { "PASS" } else { "FAIL" },
                        case.spec,
                        analysis.classification,
                        analysis.case,
                        case.expected.classification,
                        case.expected.case
                    )
                });
            }
            Err((s, msg)) => {
                eprintln!("error: {}: {msg}", case.spec);
                status = status.max(s);
            }
        }
    }
    eprintln!("{passed}/{} suite cases passed", suite.len());
    status
}

enum EntryOutcome {
    Done { report: Box<Report>, mismatch: bool, violations: usize },
    Failed(Status),
}

/// Reads a catalog and analyses the usable entries in parallel, printing
/// results in input order.
fn run_catalog(cli: &Cli, path: &Path, with_properties: bool) -> Status {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Status::UnusableCatalog;
        }
    };
    let parsed = parse_catalog(&text);
    let total = parsed.len();
    let entries: Vec<(usize, CatalogEntry)> = parsed
        .into_iter()
        .filter_map(|(line, res)| match res {
            Ok(e) => Some((line, e)),
            Err(e) => {
                eprintln!("warning: {}:{line}: skipped: {e}", path.display());
                None
            }
        })
        .collect();
    if total > 0 && entries.is_empty() {
        eprintln!("error: no usable entries in {}", path.display());
        return Status::UnusableCatalog;
    }
    let outcomes: Vec<EntryOutcome> =
        entries.par_iter().map(|(line, entry)| process_entry(cli, path, *line, entry, with_properties)).collect();

    let mut status = Status::Ok;
    let mut usable = 0;
    for outcome in outcomes {
        match outcome {
            EntryOutcome::Done { report, mismatch, violations } => {
                usable += 1;
                if mismatch || violations > 0 {
                    status = status.max(Status::Mismatch);
                }
                emit(cli, &report.to_json(), || render::report_text(&report));
            }
            EntryOutcome::Failed(s) => status = status.max(s),
        }
    }
    if total > 0 && usable == 0 {
        return Status::UnusableCatalog;
    }
    status
}

fn process_entry(cli: &Cli, path: &Path, line: usize, entry: &CatalogEntry, with_properties: bool) -> EntryOutcome {
    let start = Instant::now();
    let result = entry
        .to_group(cli.max_order)
        .map_err(AnalysisError::from)
        .and_then(|g| analyze(entry.name.clone(), g, &options(cli)));
    let analysis = match result {
        Ok(a) => a,
        Err(e) => {
            eprintln!("warning: {}:{line}: {}: {e}", path.display(), entry.name);
            return EntryOutcome::Failed(status_of(&e));
        }
    };
    let mismatch = match &entry.expected {
        Some(exp) if exp.classification != analysis.classification || exp.case != analysis.case => {
            eprintln!(
                "mismatch: {}: expected {} {}, got {} {}",
                entry.name, exp.classification, exp.case, analysis.classification, analysis.case
            );
            true
        }
        _ => false,
    };
    let mut report = report_for(cli, &analysis, BTreeMap::new());
    let mut violations = 0;
    if with_properties {
        let dihedral_n = match parse_spec(&entry.name) {
            Ok(GroupSpec::Dihedral(n)) => Some(n),
            _ => None,
        };
        match run_checks(&analysis, dihedral_n) {
            Ok(props) => {
                violations = props.violations();
                if violations > 0 {
                    eprintln!("violation: {}: {violations} property failures", entry.name);
                }
                report.properties = Some(props);
            }
            Err(e) => {
                eprintln!("warning: {}:{line}: {}: {e}", path.display(), entry.name);
                return EntryOutcome::Failed(status_of(&e));
            }
        }
    }
    if cli.timing {
        report.timing_ms = Some(BTreeMap::from([("total".to_string(), start.elapsed().as_millis() as u64)]));
    }
    EntryOutcome::Done { report: Box::new(report), mismatch, violations }
}

pub fn scan(cli: &Cli, catalog: &Path) -> Status {
    run_catalog(cli, catalog, false)
}

pub fn check_properties(cli: &Cli, catalog: &Path) -> Status {
    run_catalog(cli, catalog, true)
}
