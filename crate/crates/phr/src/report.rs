//! Output documents and their JSON, TSV and text renderings.
//!
//! Every document is built from fully sorted data so that a fixed
//! configuration always renders the same bytes. Half-integers appear as
//! `p/2` in text and TSV and as `{"twice": p}` in JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use phr_core::classify::{Exclusion, Gate, SearchOutcome, TableReport, TableStatus};
use phr_core::{eigenvalue, GradingElement, HalfInt, LieType, Pairing, Rcq, RootSystem, WeightSystem};
use serde::{Deserialize, Serialize};

use crate::cache::CacheRecord;
use crate::config::OutputFormat;

/// Something the CLI can print in every output format.
pub trait Render {
    fn to_json(&self) -> String;
    fn to_tsv(&self) -> String;
    fn to_text(&self) -> String;

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Tsv => self.to_tsv(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report documents serialize");
    s.push('\n');
    s
}

pub fn tuple(v: &[i64]) -> String {
    GradingElement(v.to_vec()).to_string()
}

/// Run-length form such as `1^16` or `2^3,1^2`.
pub fn hodge_runs(h: &[u64]) -> String {
    let mut runs: Vec<(u64, usize)> = Vec::new();
    for &x in h {
        match runs.last_mut() {
            Some((v, n)) if *v == x => *n += 1,
            _ => runs.push((x, 1)),
        }
    }
    runs.iter().map(|(v, n)| format!("{v}^{n}")).collect::<Vec<_>>().join(",")
}

/// Left-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; width];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub label: String,
    pub highest_weight: Vec<i64>,
    pub dim: u64,
    pub self_dual: bool,
}

/// The weight-multiplicity-free catalog of one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub lie_type: LieType,
    pub entries: Vec<CatalogRow>,
}

impl CatalogDoc {
    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec!["label".into(), "highest_weight".into(), "dim".into(), "self_dual".into()]];
        for e in &self.entries {
            rows.push(vec![
                e.label.clone(),
                tuple(&e.highest_weight),
                e.dim.to_string(),
                if e.self_dual { "yes" } else { "no" }.into(),
            ]);
        }
        rows
    }
}

impl Render for CatalogDoc {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        tsv(&self.rows())
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}: {} weight-multiplicity-free module(s)\n", self.lie_type, self.entries.len());
        if !self.entries.is_empty() {
            out.push_str(&columns(&self.rows()));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    /// Coefficients of the simple roots subtracted from the highest weight.
    pub lowering: Vec<i64>,
    pub dynkin: Vec<i64>,
    pub multiplicity: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<HalfInt>,
}

/// A weight system, listed by depth below the highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsDoc {
    pub lie_type: LieType,
    pub highest_weight: Vec<i64>,
    pub dim: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
    pub weights: Vec<WeightRow>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] phr_core::Error),
    #[error("document is inconsistent: {0}")]
    Inconsistent(&'static str),
}

impl WeightsDoc {
    pub fn new(rs: &RootSystem, ws: &WeightSystem, grading: Option<&GradingElement>) -> phr_core::Result<Self> {
        let mu = ws.highest_weight();
        let mut weights = Vec::with_capacity(ws.len());
        for (w, multiplicity) in ws.iter() {
            let lowering = rs.lowering_coords(mu, w).ok_or_else(|| {
                phr_core::Error::Internal("weight is not below the highest weight".into())
            })?;
            let eigenvalue = grading.map(|g| eigenvalue(rs, w, g)).transpose()?;
            weights.push(WeightRow { lowering, dynkin: w.dynkin().to_vec(), multiplicity, eigenvalue });
        }
        weights.sort_by(|a, b| {
            let depth = |r: &WeightRow| r.lowering.iter().sum::<i64>();
            (depth(a), &a.lowering).cmp(&(depth(b), &b.lowering))
        });
        Ok(WeightsDoc {
            lie_type: rs.lie_type(),
            highest_weight: mu.dynkin().to_vec(),
            dim: ws.dim(),
            grading: grading.map(|g| g.0.clone()),
            weights,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds the weight system the document describes, checking that
    /// both coordinate columns agree.
    pub fn weight_system(&self, rs: &RootSystem) -> Result<WeightSystem, DocError> {
        if rs.lie_type() != self.lie_type {
            return Err(DocError::Inconsistent("Lie type differs from the root system"));
        }
        let mu = rs.weight(self.highest_weight.clone())?;
        let mut entries = BTreeMap::new();
        for row in &self.weights {
            let w = rs.weight(row.dynkin.clone())?;
            if rs.lowering_coords(&mu, &w).as_deref() != Some(&row.lowering[..]) {
                return Err(DocError::Inconsistent("lowering and Dynkin coordinates disagree"));
            }
            entries.insert(w, row.multiplicity);
        }
        let ws = WeightSystem::from_parts(mu, entries).ok_or(DocError::Inconsistent("highest weight missing"))?;
        if ws.dim() != self.dim {
            return Err(DocError::Inconsistent("dimension does not match the multiplicities"));
        }
        Ok(ws)
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut header = vec!["lowering".to_string(), "dynkin".into(), "mult".into()];
        if self.grading.is_some() {
            header.push("eigenvalue".into());
        }
        let mut rows = vec![header];
        for w in &self.weights {
            let mut row = vec![tuple(&w.lowering), tuple(&w.dynkin), w.multiplicity.to_string()];
            if let Some(e) = w.eigenvalue {
                row.push(e.to_string());
            }
            rows.push(row);
        }
        rows
    }
}

impl Render for WeightsDoc {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        tsv(&self.rows())
    }

    fn to_text(&self) -> String {
        let mut out = format!(
            "{} highest weight {}: dim {}, {} distinct weight(s)",
            self.lie_type,
            tuple(&self.highest_weight),
            self.dim,
            self.weights.len()
        );
        if let Some(g) = &self.grading {
            let _ = write!(out, ", grading n={}", tuple(g));
        }
        out.push('\n');
        out.push_str(&columns(&self.rows()));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub label: String,
    pub highest_weight: Vec<i64>,
    pub pairing: Pairing,
    pub n: Vec<i64>,
    pub structure: Rcq,
    /// Top eigenvalue on `V_C`.
    pub m: HalfInt,
    pub hodge_numbers: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRow {
    pub label: String,
    pub highest_weight: Vec<i64>,
    pub reason: String,
    /// True when a ceiling stopped the search, so nothing is known.
    pub ceiling: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSettings {
    pub both_orientations: bool,
    pub dedupe: bool,
    pub filters: bool,
    pub gate: Gate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub lie_type: LieType,
    pub settings: SearchSettings,
    pub solutions: Vec<SolutionRow>,
    pub excluded: Vec<ExcludedRow>,
}

impl SearchDoc {
    pub fn new(rs: &RootSystem, settings: SearchSettings, outcome: &SearchOutcome) -> phr_core::Result<Self> {
        let mut solutions = Vec::with_capacity(outcome.solutions.len());
        for s in &outcome.solutions {
            let top = eigenvalue(rs, &s.highest_weight, &s.n)?;
            let m = match s.pairing {
                Pairing::SelfDualSingle => top,
                Pairing::ComplexPair => top.max(eigenvalue(rs, &rs.dual_weight(&s.highest_weight), &s.n)?),
            };
            solutions.push(SolutionRow {
                label: s.label.clone(),
                highest_weight: s.highest_weight.dynkin().to_vec(),
                pairing: s.pairing,
                n: s.n.0.clone(),
                structure: s.structure,
                m,
                hodge_numbers: s.hodge_numbers.clone(),
            });
        }
        let mut excluded: Vec<ExcludedRow> = outcome
            .excluded
            .iter()
            .map(|e| {
                let (reason, ceiling) = match &e.reason {
                    Exclusion::Filtered(r) => (r.to_string(), false),
                    Exclusion::Ceiling(err) => (err.to_string(), true),
                };
                ExcludedRow { label: e.label.clone(), highest_weight: e.highest_weight.dynkin().to_vec(), reason, ceiling }
            })
            .collect();
        excluded.sort_by(|a, b| (&a.highest_weight, &a.label).cmp(&(&b.highest_weight, &b.label)));
        Ok(SearchDoc { lie_type: rs.lie_type(), settings, solutions, excluded })
    }

    pub fn incomplete(&self) -> bool {
        self.excluded.iter().any(|e| e.ceiling)
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "label".to_string(),
            "highest_weight".into(),
            "structure".into(),
            "n".into(),
            "m".into(),
            "hodge".into(),
        ]];
        for s in &self.solutions {
            rows.push(vec![
                s.label.clone(),
                tuple(&s.highest_weight),
                s.structure.to_string(),
                tuple(&s.n),
                s.m.to_string(),
                hodge_runs(&s.hodge_numbers),
            ]);
        }
        rows
    }
}

impl Render for SearchDoc {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        tsv(&self.rows())
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}: {} solution(s)\n", self.lie_type, self.solutions.len());
        if !self.solutions.is_empty() {
            out.push_str(&columns(&self.rows()));
        }
        let ruled_out = self.excluded.iter().filter(|e| !e.ceiling).count();
        if ruled_out > 0 {
            let _ = writeln!(out, "{ruled_out} module(s) ruled out by necessary conditions");
        }
        for e in self.excluded.iter().filter(|e| e.ceiling) {
            let _ = writeln!(out, "skipped {} {}: {}", e.label, tuple(&e.highest_weight), e.reason);
        }
        out
    }
}

/// Outcome of checking the embedded reference tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub passed: usize,
    pub total: usize,
    pub tables: Vec<TableReport>,
}

impl VerifyDoc {
    pub fn new(tables: Vec<TableReport>) -> Self {
        let passed = tables.iter().filter(|t| t.status == TableStatus::Pass).count();
        VerifyDoc { passed, total: tables.len(), tables }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

fn finding_text(f: &phr_core::classify::Finding) -> String {
    let mut s = format!("{} mu={} n={}", f.lie_type, tuple(&f.mu), tuple(&f.n));
    if !f.detail.is_empty() {
        let _ = write!(s, " [{}]", f.detail);
    }
    s
}

impl Render for VerifyDoc {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        let mut rows = vec![vec![
            "status".to_string(),
            "id".into(),
            "found".into(),
            "expected".into(),
            "missing".into(),
            "extra".into(),
            "typo_corrected".into(),
        ]];
        for t in &self.tables {
            rows.push(vec![
                t.status.to_string(),
                t.id.clone(),
                t.found.len().to_string(),
                t.expected.len().to_string(),
                t.missing.len().to_string(),
                t.extra.len().to_string(),
                t.typo_corrected.to_string(),
            ]);
        }
        tsv(&rows)
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            let note = if t.typo_corrected { ", corrected listing" } else { "" };
            let _ = writeln!(out, "{:<10} {}  {} ({} found{note})", t.status, t.id, t.title, t.found.len());
            for f in &t.missing {
                let _ = writeln!(out, "    missing: {}", finding_text(f));
            }
            for f in &t.extra {
                let _ = writeln!(out, "    extra:   {}", finding_text(f));
            }
            for s in &t.incomplete {
                let _ = writeln!(out, "    skipped: {s}");
            }
        }
        let _ = writeln!(out, "{}/{} tables passed", self.passed, self.total);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFileRow {
    pub file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_type: Option<LieType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest_weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CacheFileRow {
    pub fn from_record(file: String, record: Result<CacheRecord, String>) -> Self {
        match record {
            Ok(r) => CacheFileRow {
                file,
                lie_type: Some(r.lie_type),
                weights: Some(r.weights.len()),
                dim: Some(r.dim()),
                highest_weight: Some(r.highest_weight),
                error: None,
            },
            Err(e) => CacheFileRow {
                file,
                lie_type: None,
                highest_weight: None,
                weights: None,
                dim: None,
                error: Some(e),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDoc {
    pub dir: Option<String>,
    pub files: Vec<CacheFileRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<usize>,
}

impl CacheDoc {
    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "file".to_string(),
            "type".into(),
            "highest_weight".into(),
            "weights".into(),
            "dim".into(),
        ]];
        for f in &self.files {
            match &f.error {
                Some(e) => rows.push(vec![f.file.clone(), "error".into(), e.clone(), String::new(), String::new()]),
                None => rows.push(vec![
                    f.file.clone(),
                    f.lie_type.map(|t| t.to_string()).unwrap_or_default(),
                    f.highest_weight.as_deref().map(tuple).unwrap_or_default(),
                    f.weights.map(|w| w.to_string()).unwrap_or_default(),
                    f.dim.map(|d| d.to_string()).unwrap_or_default(),
                ]),
            }
        }
        rows
    }
}

impl Render for CacheDoc {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        tsv(&self.rows())
    }

    fn to_text(&self) -> String {
        let dir = self.dir.as_deref().unwrap_or("(no cache directory configured)");
        let mut out = match self.removed {
            Some(n) => format!("{dir}: removed {n} file(s)\n"),
            None => format!("{dir}: {} file(s)\n", self.files.len()),
        };
        if !self.files.is_empty() {
            out.push_str(&columns(&self.rows()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use phr_core::{build_root_system, weight_system, Family, Limits};

    #[test]
    fn runs_compress_equal_neighbours() {
        assert_eq!(hodge_runs(&[1; 16]), "1^16");
        assert_eq!(hodge_runs(&[2, 2, 2, 1, 1]), "2^3,1^2");
        assert_eq!(hodge_runs(&[]), "");
    }

    #[test]
    fn half_integers_render_exactly() {
        let row = WeightRow {
            lowering: vec![0],
            dynkin: vec![1],
            multiplicity: 1,
            eigenvalue: Some(HalfInt::from_twice(-3)),
        };
        let text = serde_json::to_string(&row).unwrap();
        assert!(text.contains(r#""eigenvalue":{"twice":-3}"#), "{text}");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
    }

    #[test]
    fn weights_json_round_trips_to_identical_bytes() {
        let rs = build_root_system(LieType::new(Family::G, 2).unwrap()).unwrap();
        let mu = rs.weight(vec![1, 0]).unwrap();
        let ws = weight_system(&rs, &mu, &Limits::default()).unwrap();
        let g = GradingElement(vec![1, 1]);
        let first = WeightsDoc::new(&rs, &ws, Some(&g)).unwrap().to_json();
        let parsed = WeightsDoc::from_json(&first).unwrap();
        let rebuilt = parsed.weight_system(&rs).unwrap();
        assert_eq!(rebuilt, ws);
        let second = WeightsDoc::new(&rs, &rebuilt, parsed.grading.map(GradingElement).as_ref()).unwrap().to_json();
        assert_eq!(first, second);
    }

    #[test]
    fn tampered_documents_are_rejected() {
        let rs = build_root_system(LieType::new(Family::A, 2).unwrap()).unwrap();
        let mu = rs.weight(vec![1, 0]).unwrap();
        let ws = weight_system(&rs, &mu, &Limits::default()).unwrap();
        let mut doc = WeightsDoc::new(&rs, &ws, None).unwrap();
        doc.weights[1].lowering = vec![0, 1];
        assert!(doc.weight_system(&rs).is_err());
    }

    #[test]
    fn text_columns_are_aligned() {
        let rows = vec![vec!["a".to_string(), "bbb".into()], vec!["ccc".into(), "d".into()]];
        assert_eq!(columns(&rows), "a    bbb\nccc  d\n");
    }
}
