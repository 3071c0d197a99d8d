//! Exhaustive search for principal grading elements, necessary-condition
//! filters, and the reference tables used to check the whole pipeline.

mod enumerate;
mod filters;
mod golden;
mod search;
mod verify;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::hodge::{check_principal, eigen_report, GradingElement, ModuleSpec, Pairing, Rcq, RejectReason};
use crate::rootsys::{RootSystem, Weight};
use crate::weightsys::{mf_catalog, weyl_dim, WeightSystemSource};
use crate::{Error, Limits, Result};

pub use enumerate::{enumerate_gradings, Gradings};
pub use filters::{target_lattice_ok, type_a_filters, FilterOutcome, FilterReason};
pub use golden::{golden_tables, Case, Finding, GoldenTable, TableMode};
pub use search::{principal_gradings, target_m};
pub use verify::{scope_matches, verify_paper, verify_table, TableReport, TableStatus};

/// Which extreme weight of a complex pair carries the top eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    /// The listed highest weight `μ` reaches `m`.
    Canonical,
    /// The dual highest weight `μ*` reaches `m`.
    Dual,
}

/// What a search accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Gate {
    /// Principal in full: simple consecutive eigenvalues and a real or
    /// complex module.
    Principal,
    /// Simple consecutive eigenvalues on the nominal `V_C`, whatever the
    /// structure.
    EigenvaluesOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchOptions {
    pub limits: Limits,
    /// Also report complex-pair solutions in which `μ*` carries the top
    /// eigenvalue.
    pub both_orientations: bool,
    /// Drop solutions that are diagram-automorphism images of earlier ones.
    pub dedupe: bool,
    /// Apply the necessary-condition filters before searching.
    pub filters: bool,
    pub gate: Gate,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limits: Limits::default(),
            both_orientations: false,
            dedupe: false,
            filters: true,
            gate: Gate::Principal,
        }
    }
}

/// A module to search, usually a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target {
    pub label: String,
    pub highest_weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub label: String,
    pub highest_weight: Weight,
    pub pairing: Pairing,
    pub n: GradingElement,
    pub structure: Rcq,
    /// Hodge numbers on `V_C`, from the top eigenvalue down.
    pub hodge_numbers: Vec<u64>,
}

/// Why a module was not searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exclusion {
    /// A necessary condition already rules it out.
    Filtered(FilterReason),
    /// A resource ceiling prevented the search; nothing is known.
    Ceiling(Error),
}

impl core::fmt::Display for Exclusion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Exclusion::Filtered(reason) => write!(f, "ruled out by {reason}"),
            Exclusion::Ceiling(err) => write!(f, "{err}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excluded {
    pub label: String,
    pub highest_weight: Weight,
    pub reason: Exclusion,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub solutions: Vec<Solution>,
    pub excluded: Vec<Excluded>,
}

impl SearchOutcome {
    /// Modules skipped because of a ceiling, i.e. gaps in the answer.
    pub fn incomplete(&self) -> impl Iterator<Item = &Excluded> {
        self.excluded.iter().filter(|e| matches!(e.reason, Exclusion::Ceiling(_)))
    }

    pub fn merge(&mut self, other: SearchOutcome) {
        self.solutions.extend(other.solutions);
        self.excluded.extend(other.excluded);
    }

    /// Sorts solutions and, if asked, removes automorphism images.
    pub fn finish(&mut self, rs: &RootSystem, dedupe: bool) {
        self.solutions.sort_by(|a, b| {
            (&a.highest_weight, &a.n, &a.label).cmp(&(&b.highest_weight, &b.n, &b.label))
        });
        self.solutions.dedup_by(|a, b| a.highest_weight == b.highest_weight && a.n == b.n);
        if dedupe {
            if let Some(flip) = rs.diagram_flip() {
                let mut seen: BTreeSet<(Vec<i64>, Vec<i64>)> = BTreeSet::new();
                self.solutions.retain(|s| {
                    let key = (s.highest_weight.dynkin().to_vec(), s.n.0.clone());
                    let image = (permute(&key.0, &flip), permute(&key.1, &flip));
                    let canonical = core::cmp::min(key, image);
                    seen.insert(canonical)
                });
            }
        }
        self.excluded.sort_by(|a, b| (&a.highest_weight, &a.label).cmp(&(&b.highest_weight, &b.label)));
    }
}

/// Applies a node permutation: entry `i` moves to position `perm[i]`.
pub fn permute(v: &[i64], perm: &[usize]) -> Vec<i64> {
    let mut out = alloc::vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[perm[i]] = x;
    }
    out
}

/// Catalog entries of a root system as search targets.
pub fn catalog_targets(rs: &RootSystem, limits: &Limits) -> Vec<Target> {
    mf_catalog(rs, limits)
        .into_iter()
        .map(|e| Target { label: e.label, highest_weight: e.highest_weight })
        .collect()
}

/// Searches one module. Ceiling violations are recorded in the outcome
/// rather than returned as errors.
pub fn search_target(
    rs: &Arc<RootSystem>,
    target: &Target,
    opts: &SearchOptions,
    source: &dyn WeightSystemSource,
) -> Result<SearchOutcome> {
    let mu = &target.highest_weight;
    let mut out = SearchOutcome::default();
    let exclude = |reason| Excluded { label: target.label.clone(), highest_weight: mu.clone(), reason };
    if rs.rank() > opts.limits.rank_ceiling {
        return Err(Error::RankCeiling { rank: rs.rank(), ceiling: opts.limits.rank_ceiling });
    }
    if mu.is_zero() {
        return Err(Error::Unbounded);
    }
    let pairing = Pairing::natural(rs, mu);
    let mut pinned = filters::top_step_hint(mu, pairing);
    if opts.filters {
        let verdict = if rs.lie_type().family() == crate::rootsys::Family::A {
            type_a_filters(rs, mu, pairing)?
        } else if target_lattice_ok(rs, mu, pairing)? {
            FilterOutcome::Pass { fixed: pinned }
        } else {
            FilterOutcome::Fail(FilterReason::TargetLattice)
        };
        match verdict {
            FilterOutcome::Fail(reason) => {
                out.excluded.push(exclude(Exclusion::Filtered(reason)));
                return Ok(out);
            }
            FilterOutcome::Pass { fixed } => pinned = fixed,
        }
    } else {
        pinned = None;
    }

    let dim = weyl_dim(rs, mu)?;
    if dim > opts.limits.dim_ceiling {
        let err = Error::DimensionCeiling { dim, ceiling: opts.limits.dim_ceiling };
        out.excluded.push(exclude(Exclusion::Ceiling(err)));
        return Ok(out);
    }
    let spec = ModuleSpec::with_source(rs.clone(), mu.clone(), pairing, source, &opts.limits)?;

    let mut orientations = alloc::vec![Orientation::Canonical];
    if opts.both_orientations && pairing == Pairing::ComplexPair {
        orientations.push(Orientation::Dual);
    }
    for orientation in orientations {
        for n in principal_gradings(rs, spec.weights(), pairing, orientation, pinned)? {
            let check = check_principal(&spec, &n)?;
            let failures = check.failures();
            if failures.iter().any(|&r| r != RejectReason::QuaternionicSelfDual) {
                return Err(Error::Internal("search returned a grading that fails the principal test".into()));
            }
            if opts.gate == Gate::Principal && !failures.is_empty() {
                continue;
            }
            let report = eigen_report(&spec, &n)?;
            out.solutions.push(Solution {
                label: target.label.clone(),
                highest_weight: mu.clone(),
                pairing,
                n,
                structure: check.structure,
                hodge_numbers: report.hodge_numbers,
            });
        }
    }
    Ok(out)
}

/// Searches every target in turn and merges the results.
pub fn search_principal(
    rs: &Arc<RootSystem>,
    targets: &[Target],
    opts: &SearchOptions,
    source: &dyn WeightSystemSource,
) -> Result<SearchOutcome> {
    let mut out = SearchOutcome::default();
    for t in targets {
        out.merge(search_target(rs, t, opts, source)?);
    }
    out.finish(rs, opts.dedupe);
    Ok(out)
}
