use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::golden::{hodge_detail, Finding, GoldenTable, TableMode};
use super::{catalog_targets, search_principal, Excluded, Gate, SearchOptions, Target};
use crate::rootsys::build_root_system;
use crate::weightsys::{mf_catalog, WeightSystemSource};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TableStatus {
    Pass,
    Fail,
    /// A ceiling stopped part of the search, so the table cannot be decided.
    Incomplete,
}

impl fmt::Display for TableStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            TableStatus::Pass => "PASS",
            TableStatus::Fail => "FAIL",
            TableStatus::Incomplete => "INCOMPLETE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TableReport {
    pub id: String,
    pub title: String,
    pub status: TableStatus,
    pub typo_corrected: bool,
    pub found: Vec<Finding>,
    pub expected: Vec<Finding>,
    pub missing: Vec<Finding>,
    pub extra: Vec<Finding>,
    /// Modules skipped at a ceiling, as `type label: reason`.
    pub incomplete: Vec<String>,
}

/// `scope` selects a table by exact id or by a `/`-separated prefix; `all`
/// selects everything.
pub fn scope_matches(scope: &str, id: &str) -> bool {
    scope == "all" || id == scope || (id.starts_with(scope) && id[scope.len()..].starts_with('/'))
}

/// Recomputes one table and compares it with its expected set.
pub fn verify_table(table: &GoldenTable, opts: &SearchOptions, source: &dyn WeightSystemSource) -> Result<TableReport> {
    let mut found = BTreeSet::new();
    let mut incomplete = Vec::new();
    for case in &table.cases {
        let rs = Arc::new(build_root_system(case.lie_type)?);
        match table.mode {
            TableMode::Catalog => {
                for e in mf_catalog(&rs, &opts.limits) {
                    found.insert(Finding {
                        lie_type: case.lie_type,
                        mu: e.highest_weight.dynkin().to_vec(),
                        n: Vec::new(),
                        detail: e.label,
                    });
                }
            }
            TableMode::Search(gate) => {
                let all = catalog_targets(&rs, &opts.limits);
                let targets: Vec<Target> = match &case.labels {
                    None => all,
                    Some(labels) => all.into_iter().filter(|t| labels.contains(&t.label)).collect(),
                };
                let case_opts = SearchOptions { gate, dedupe: false, both_orientations: false, ..*opts };
                let outcome = search_principal(&rs, &targets, &case_opts, source)?;
                for s in &outcome.solutions {
                    let detail = match gate {
                        Gate::Principal => String::new(),
                        Gate::EigenvaluesOnly => hodge_detail(s.structure, &s.hodge_numbers),
                    };
                    found.insert(Finding {
                        lie_type: case.lie_type,
                        mu: s.highest_weight.dynkin().to_vec(),
                        n: s.n.0.clone(),
                        detail,
                    });
                }
                for Excluded { label, reason, .. } in outcome.incomplete() {
                    incomplete.push(alloc::format!("{} {label}: {reason}", case.lie_type));
                }
            }
        }
    }
    let missing: Vec<Finding> = table.expected.difference(&found).cloned().collect();
    let extra: Vec<Finding> = found.difference(&table.expected).cloned().collect();
    let status = if !extra.is_empty() {
        TableStatus::Fail
    } else if !incomplete.is_empty() {
        TableStatus::Incomplete
    } else if !missing.is_empty() {
        TableStatus::Fail
    } else {
        TableStatus::Pass
    };
    Ok(TableReport {
        id: table.id.into(),
        title: table.title.into(),
        status,
        typo_corrected: table.typo_corrected,
        found: found.into_iter().collect(),
        expected: table.expected.iter().cloned().collect(),
        missing,
        extra,
        incomplete,
    })
}

/// Verifies every table matching `scope`, sequentially.
pub fn verify_paper(scope: &str, opts: &SearchOptions, source: &dyn WeightSystemSource) -> Result<Vec<TableReport>> {
    super::golden_tables(&opts.limits)?
        .iter()
        .filter(|t| scope_matches(scope, t.id))
        .map(|t| verify_table(t, opts, source))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes() {
        assert!(scope_matches("all", "C/rank2"));
        assert!(scope_matches("C", "C/rank2"));
        assert!(scope_matches("C/rank2", "C/rank2"));
        assert!(!scope_matches("C/rank", "C/rank2"));
        assert!(!scope_matches("A/rank3", "A/rank3-wedge2"));
        assert!(scope_matches("A", "A/rank3-wedge2"));
    }

    #[test]
    fn a_ceiling_makes_a_table_undecided() {
        let limits = crate::Limits { dim_ceiling: 5, ..crate::Limits::default() };
        let opts = SearchOptions { limits, ..SearchOptions::default() };
        let reports = verify_paper("exceptional/g2", &opts, &crate::Compute).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, TableStatus::Incomplete);
        assert_eq!(reports[0].missing.len(), 1);
        assert_eq!(alloc::format!("{:<6}|", TableStatus::Pass), "PASS  |");
    }
}
