//! Command implementations, independent of argument parsing.

use std::sync::Arc;

use phr_core::classify::{
    catalog_targets, golden_tables, scope_matches, search_target, verify_table, Gate, SearchOptions, SearchOutcome,
    Target,
};
use phr_core::{
    build_root_system, fundamental_weight, mf_catalog, weyl_dim, Error, Family, GradingElement, LieType, Limits,
    RootSystem, Weight, WeightSystemSource,
};
use rayon::prelude::*;

use crate::cache::{CacheError, WeightCache};
use crate::config::{CliConfig, ConfigError, Threads};
use crate::report::{CacheDoc, CacheFileRow, CatalogDoc, CatalogRow, SearchDoc, SearchSettings, VerifyDoc, WeightsDoc};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("cannot start worker threads: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl RunError {
    /// 1 for failures, 2 for usage errors, 3 for resource ceilings.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) | RunError::Config(_) => 2,
            RunError::Core(e) => match e {
                Error::RankCeiling { .. } | Error::DimensionCeiling { .. } | Error::Overflow => 3,
                Error::Internal(_) => 1,
                _ => 2,
            },
            RunError::Cache(_) | RunError::Threads(_) | RunError::Output(_) => 1,
        }
    }
}

pub type RunResult<T> = Result<T, RunError>;

/// Builds a root system after checking the rank ceiling.
pub fn root_system(lie_type: LieType, limits: &Limits) -> RunResult<Arc<RootSystem>> {
    if lie_type.rank() > limits.rank_ceiling {
        return Err(Error::RankCeiling { rank: lie_type.rank(), ceiling: limits.rank_ceiling }.into());
    }
    Ok(Arc::new(build_root_system(lie_type)?))
}

pub fn lie_type(family: Family, rank: usize) -> RunResult<LieType> {
    LieType::new(family, rank).map_err(|e| RunError::Usage(e.to_string()))
}

fn with_pool<T: Send>(threads: Threads, job: impl FnOnce() -> T + Send) -> RunResult<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Threads::Fixed(n) = threads {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?.install(job))
}

fn parse_int_list(text: &str, what: &str) -> RunResult<Vec<i64>> {
    let body = text.trim().strip_suffix(',').unwrap_or(text.trim());
    body.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| RunError::Usage(format!("invalid {what} `{text}`: expected comma-separated integers")))
        })
        .collect()
}

fn alias_index(arg: &str, rank: usize) -> RunResult<usize> {
    match arg.parse::<usize>() {
        Ok(k) if (1..=rank).contains(&k) => Ok(k),
        _ => Err(RunError::Usage(format!("alias index `{arg}` must lie in 1..={rank}"))),
    }
}

fn alias_multiple(arg: &str) -> RunResult<i64> {
    match arg.parse::<i64>() {
        Ok(a) if a >= 1 => Ok(a),
        _ => Err(RunError::Usage(format!("alias degree `{arg}` must be a positive integer"))),
    }
}

fn scaled(rs: &RootSystem, k: usize, a: i64) -> RunResult<Weight> {
    let mut d = fundamental_weight(rs, k)?.dynkin().to_vec();
    d[k - 1] *= a;
    Ok(rs.weight(d)?)
}

/// Resolves a highest-weight argument: Dynkin labels such as `0,0,1` (a
/// trailing comma is allowed), an alias (`standard`, `spin`, `spin-`,
/// `sym:<a>`, `sym-dual:<a>`, `wedge:<k>`), or any catalog label.
///
/// In a search, `spin` selects every spin module of the type.
pub fn resolve_targets(rs: &RootSystem, arg: &str, limits: &Limits, for_search: bool) -> RunResult<Vec<Target>> {
    let t = rs.lie_type();
    let r = t.rank();
    let family = t.family();
    let unsupported = || RunError::Usage(format!("alias `{arg}` is not defined for type {t}"));
    let catalog = mf_catalog(rs, limits);
    let label_for = |w: &Weight| {
        catalog
            .iter()
            .find(|e| &e.highest_weight == w)
            .map(|e| e.label.clone())
            .unwrap_or_else(|| crate::report::tuple(w.dynkin()))
    };
    let single = |w: Weight| Ok(vec![Target { label: label_for(&w), highest_weight: w }]);

    if arg.trim_start().starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+') {
        let dynkin = parse_int_list(arg, "highest weight")?;
        let w = rs.weight(dynkin)?;
        if !w.is_dominant() {
            return Err(Error::NonDominant.into());
        }
        return single(w);
    }
    let (name, param) = match arg.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (arg, None),
    };
    match (name, param) {
        ("standard", None) => match family {
            Family::A | Family::B | Family::C | Family::D | Family::G => single(fundamental_weight(rs, 1)?),
            _ => Err(unsupported()),
        },
        ("spin", None) if for_search && family == Family::D => Ok(catalog
            .iter()
            .filter(|e| e.label.starts_with("spin"))
            .map(|e| Target { label: e.label.clone(), highest_weight: e.highest_weight.clone() })
            .collect()),
        ("spin", None) if matches!(family, Family::B | Family::D) => single(fundamental_weight(rs, r)?),
        ("spin-", None) if family == Family::D => single(fundamental_weight(rs, r - 1)?),
        ("wedge", Some(k)) => single(fundamental_weight(rs, alias_index(k, r)?)?),
        ("sym", Some(a)) if family == Family::A => single(scaled(rs, 1, alias_multiple(a)?)?),
        ("sym-dual", Some(a)) if family == Family::A => single(scaled(rs, r, alias_multiple(a)?)?),
        _ => match catalog.iter().find(|e| e.label == arg) {
            Some(e) => single(e.highest_weight.clone()),
            None if ["standard", "spin", "spin-", "wedge", "sym", "sym-dual"].contains(&name) => Err(unsupported()),
            None => Err(RunError::Usage(format!("unknown highest weight `{arg}` for type {t}"))),
        },
    }
}

pub fn list_mf(lie_type: LieType, cfg: &CliConfig) -> RunResult<CatalogDoc> {
    let rs = root_system(lie_type, &cfg.limits)?;
    let entries = mf_catalog(&rs, &cfg.limits)
        .into_iter()
        .map(|e| {
            Ok(CatalogRow {
                dim: weyl_dim(&rs, &e.highest_weight)?,
                highest_weight: e.highest_weight.dynkin().to_vec(),
                label: e.label,
                self_dual: e.self_dual,
            })
        })
        .collect::<RunResult<Vec<_>>>()?;
    Ok(CatalogDoc { lie_type, entries })
}

pub fn weights(
    lie_type: LieType,
    mu: &str,
    grading: Option<&str>,
    cfg: &CliConfig,
    source: &dyn WeightSystemSource,
) -> RunResult<WeightsDoc> {
    let rs = root_system(lie_type, &cfg.limits)?;
    let target = match resolve_targets(&rs, mu, &cfg.limits, false)?.as_slice() {
        [t] => t.clone(),
        _ => return Err(RunError::Usage(format!("`{mu}` does not name a single highest weight"))),
    };
    let grading = grading
        .map(|g| {
            let n = parse_int_list(g, "grading")?;
            if n.len() != rs.rank() {
                return Err(RunError::Core(Error::LengthMismatch { expected: rs.rank(), found: n.len() }));
            }
            Ok(GradingElement(n))
        })
        .transpose()?;
    let ws = source.weight_system(&rs, &target.highest_weight, &cfg.limits)?;
    Ok(WeightsDoc::new(&rs, &ws, grading.as_ref())?)
}

pub fn search(
    lie_type: LieType,
    selection: &[String],
    settings: SearchSettings,
    cfg: &CliConfig,
    source: &dyn WeightSystemSource,
) -> RunResult<SearchDoc> {
    let rs = root_system(lie_type, &cfg.limits)?;
    let mut targets = Vec::new();
    if selection.is_empty() {
        targets = catalog_targets(&rs, &cfg.limits);
    } else {
        for arg in selection {
            for t in resolve_targets(&rs, arg, &cfg.limits, true)? {
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
        }
    }
    let opts = SearchOptions {
        limits: cfg.limits,
        both_orientations: settings.both_orientations,
        dedupe: settings.dedupe,
        filters: settings.filters,
        gate: settings.gate,
    };
    let parts = with_pool(cfg.threads, || {
        targets.par_iter().map(|t| search_target(&rs, t, &opts, source)).collect::<Result<Vec<_>, _>>()
    })??;
    let mut outcome = SearchOutcome::default();
    for part in parts {
        outcome.merge(part);
    }
    outcome.finish(&rs, opts.dedupe);
    Ok(SearchDoc::new(&rs, settings, &outcome)?)
}

pub fn verify(scopes: &[String], cfg: &CliConfig, source: &dyn WeightSystemSource) -> RunResult<VerifyDoc> {
    let tables = golden_tables(&cfg.limits)?;
    for scope in scopes {
        if !tables.iter().any(|t| scope_matches(scope, t.id)) {
            let ids: Vec<&str> = tables.iter().map(|t| t.id).collect();
            return Err(RunError::Usage(format!("unknown table scope `{scope}`; known ids: {}", ids.join(", "))));
        }
    }
    let selected: Vec<_> = tables.iter().filter(|t| scopes.iter().any(|s| scope_matches(s, t.id))).collect();
    let opts = SearchOptions { limits: cfg.limits, ..SearchOptions::default() };
    let reports = with_pool(cfg.threads, || {
        selected.par_iter().map(|t| verify_table(t, &opts, source)).collect::<Result<Vec<_>, _>>()
    })??;
    Ok(VerifyDoc::new(reports))
}

fn require_dir(cache: &WeightCache) -> RunResult<String> {
    cache
        .dir()
        .map(|d| d.display().to_string())
        .ok_or_else(|| RunError::Usage("no cache directory configured; pass --cache-dir or set HG_CACHE_DIR".into()))
}

pub fn cache_inspect(cache: &WeightCache) -> RunResult<CacheDoc> {
    let dir = require_dir(cache)?;
    let files = cache
        .inspect()?
        .into_iter()
        .map(|(name, record)| CacheFileRow::from_record(name, record.map_err(|e| e.to_string())))
        .collect();
    Ok(CacheDoc { dir: Some(dir), files, removed: None })
}

pub fn cache_clear(cache: &WeightCache) -> RunResult<CacheDoc> {
    let dir = require_dir(cache)?;
    let removed = cache.clear()?;
    Ok(CacheDoc { dir: Some(dir), files: Vec::new(), removed: Some(removed) })
}

/// The default search settings exposed on the command line.
pub fn search_settings(both_orientations: bool, dedupe: bool, eigenvalues_only: bool, no_filters: bool) -> SearchSettings {
    SearchSettings {
        both_orientations,
        dedupe,
        filters: !no_filters,
        gate: if eigenvalues_only { Gate::EigenvaluesOnly } else { Gate::Principal },
    }
}
