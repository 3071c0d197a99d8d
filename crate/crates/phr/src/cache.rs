//! Weight-system cache: an in-memory map shared across threads, optionally
//! backed by one text file per module.
//!
//! File format, one module per file:
//!
//! ```text
//! type B3 highest 0 0 1
//! -1 0 1 : 1
//! ...
//! ```
//!
//! The header names the Lie type and the Dynkin labels of the highest
//! weight. Every following line is a weight `d1 … dr : mult` in Dynkin
//! labels, sorted lexicographically by the label vector.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use phr_core::{weight_system, weyl_dim, Error, LieType, Limits, RootSystem, Weight, WeightSystem, WeightSystemSource};

pub const FILE_EXTENSION: &str = "wts";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed cache file {path}, line {line}: {message}")]
    Malformed { path: PathBuf, line: usize, message: String },
}

/// Header and contents of one parsed cache file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub lie_type: LieType,
    pub highest_weight: Vec<i64>,
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl CacheRecord {
    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }
}

pub fn render(lie_type: LieType, ws: &WeightSystem) -> String {
    let mut out = format!("type {lie_type} highest {}\n", join(ws.highest_weight().dynkin()));
    let sorted: BTreeMap<&[i64], u64> = ws.iter().map(|(w, m)| (w.dynkin(), m)).collect();
    for (dynkin, mult) in sorted {
        out.push_str(&join(dynkin));
        out.push_str(&format!(" : {mult}\n"));
    }
    out
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn parse(text: &str, path: &Path) -> Result<CacheRecord, CacheError> {
    let bad = |line: usize, message: &str| CacheError::Malformed {
        path: path.to_path_buf(),
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("type") {
        return Err(bad(1, "header must start with `type`"));
    }
    let lie_type: LieType = words
        .next()
        .ok_or_else(|| bad(1, "missing Lie type"))?
        .parse()
        .map_err(|_| bad(1, "invalid Lie type"))?;
    if words.next() != Some("highest") {
        return Err(bad(1, "expected `highest`"));
    }
    let highest_weight = parse_ints(words).ok_or_else(|| bad(1, "invalid highest weight"))?;
    if highest_weight.len() != lie_type.rank() {
        return Err(bad(1, "highest weight length does not match the rank"));
    }
    let mut weights = BTreeMap::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once(':').ok_or_else(|| bad(i + 1, "expected `d1 … dr : mult`"))?;
        let dynkin = parse_ints(lhs.split_whitespace()).ok_or_else(|| bad(i + 1, "invalid Dynkin labels"))?;
        if dynkin.len() != lie_type.rank() {
            return Err(bad(i + 1, "weight length does not match the rank"));
        }
        let mult: u64 = rhs.trim().parse().map_err(|_| bad(i + 1, "invalid multiplicity"))?;
        if mult == 0 || weights.insert(dynkin, mult).is_some() {
            return Err(bad(i + 1, "zero multiplicity or repeated weight"));
        }
    }
    Ok(CacheRecord { lie_type, highest_weight, weights })
}

fn parse_ints<'a>(words: impl Iterator<Item = &'a str>) -> Option<Vec<i64>> {
    words.map(|w| w.parse().ok()).collect()
}

type Key = (LieType, Vec<i64>);

/// A cache file name with its parsed contents.
pub type InspectedFile = (String, Result<CacheRecord, CacheError>);

/// Shared weight-system cache. Lookups take a read lock; inserts take the
/// write lock briefly. Files are written through a temporary file and a
/// rename, so readers never observe a partial file.
#[derive(Debug, Default)]
pub struct WeightCache {
    dir: Option<PathBuf>,
    memory: RwLock<HashMap<Key, Arc<WeightSystem>>>,
    warnings: Mutex<Vec<String>>,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl WeightCache {
    pub fn in_memory() -> Self {
        WeightCache::default()
    }

    pub fn on_disk(dir: impl Into<PathBuf>) -> Result<Self, CacheError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|source| CacheError::Io { path: dir.clone(), source })?;
        Ok(WeightCache { dir: Some(dir), ..WeightCache::default() })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_name(lie_type: LieType, dynkin: &[i64]) -> String {
        let labels: Vec<String> = dynkin.iter().map(i64::to_string).collect();
        format!("{lie_type}-{}.{FILE_EXTENSION}", labels.join("_"))
    }

    /// Problems met while reading or writing files. They never fail a
    /// lookup, since the cache can always recompute.
    pub fn take_warnings(&self) -> Vec<String> {
        std::mem::take(&mut *self.warnings.lock().unwrap_or_else(|e| e.into_inner()))
    }

    fn warn(&self, msg: String) {
        self.warnings.lock().unwrap_or_else(|e| e.into_inner()).push(msg);
    }

    /// Every cache file in the directory, parsed, sorted by file name.
    pub fn inspect(&self) -> Result<Vec<InspectedFile>, CacheError> {
        let mut out = Vec::new();
        for path in self.files()? {
            let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let record = fs::read_to_string(&path)
                .map_err(|source| CacheError::Io { path: path.clone(), source })
                .and_then(|text| parse(&text, &path));
            out.push((name, record));
        }
        Ok(out)
    }

    /// Removes every cache file and the in-memory map. Returns the number of
    /// files removed.
    pub fn clear(&self) -> Result<usize, CacheError> {
        self.memory.write().unwrap_or_else(|e| e.into_inner()).clear();
        let files = self.files()?;
        for path in &files {
            fs::remove_file(path).map_err(|source| CacheError::Io { path: path.clone(), source })?;
        }
        Ok(files.len())
    }

    fn files(&self) -> Result<Vec<PathBuf>, CacheError> {
        let Some(dir) = &self.dir else { return Ok(Vec::new()) };
        let read = match fs::read_dir(dir) {
            Ok(r) => r,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(source) => return Err(CacheError::Io { path: dir.clone(), source }),
        };
        let mut files = Vec::new();
        for entry in read {
            let path = entry.map_err(|source| CacheError::Io { path: dir.clone(), source })?.path();
            if path.extension().is_some_and(|e| e == FILE_EXTENSION) && path.is_file() {
                files.push(path);
            }
        }
        files.sort();
        Ok(files)
    }

    fn load(&self, rs: &RootSystem, mu: &Weight, path: &Path) -> Option<WeightSystem> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                self.warn(format!("cannot read {}: {e}", path.display()));
                return None;
            }
        };
        let record = match parse(&text, path) {
            Ok(r) => r,
            Err(e) => {
                self.warn(e.to_string());
                return None;
            }
        };
        let rebuilt = self.rebuild(rs, mu, &record);
        if rebuilt.is_none() {
            self.warn(format!("{} does not match the requested module; recomputing", path.display()));
        }
        rebuilt
    }

    fn rebuild(&self, rs: &RootSystem, mu: &Weight, record: &CacheRecord) -> Option<WeightSystem> {
        if record.lie_type != rs.lie_type() || record.highest_weight != mu.dynkin() {
            return None;
        }
        let mut entries = BTreeMap::new();
        for (dynkin, &mult) in &record.weights {
            entries.insert(rs.weight(dynkin.clone()).ok()?, mult);
        }
        let ws = WeightSystem::from_parts(mu.clone(), entries)?;
        (ws.multiplicity(mu) == 1 && weyl_dim(rs, mu).ok()? == ws.dim()).then_some(ws)
    }

    fn store(&self, path: &Path, text: &str) {
        if let Err(e) = write_atomically(path, text) {
            self.warn(format!("cannot write {}: {e}", path.display()));
        }
    }
}

fn write_atomically(path: &Path, text: &str) -> io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let tmp = dir.join(format!(
        ".{}.{}.{}.tmp",
        path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
        std::process::id(),
        TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    let result = (|| {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(text.as_bytes())?;
        file.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

impl WeightSystemSource for WeightCache {
    fn weight_system(&self, rs: &RootSystem, mu: &Weight, limits: &Limits) -> phr_core::Result<Arc<WeightSystem>> {
        let dim = weyl_dim(rs, mu)?;
        if dim > limits.dim_ceiling {
            return Err(Error::DimensionCeiling { dim, ceiling: limits.dim_ceiling });
        }
        let key = (rs.lie_type(), mu.dynkin().to_vec());
        if let Some(ws) = self.memory.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(ws.clone());
        }
        let path = self.dir.as_ref().map(|d| d.join(Self::file_name(key.0, &key.1)));
        let loaded = path.as_deref().and_then(|p| self.load(rs, mu, p));
        let ws = match loaded {
            Some(ws) => ws,
            None => {
                let ws = weight_system(rs, mu, limits)?;
                if let Some(p) = &path {
                    self.store(p, &render(key.0, &ws));
                }
                ws
            }
        };
        let mut memory = self.memory.write().unwrap_or_else(|e| e.into_inner());
        Ok(memory.entry(key).or_insert_with(|| Arc::new(ws)).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use phr_core::{build_root_system, Family};

    #[test]
    fn render_then_parse_round_trips() {
        let rs = build_root_system(LieType::new(Family::B, 3).unwrap()).unwrap();
        let mu = rs.weight(vec![0, 0, 1]).unwrap();
        let ws = weight_system(&rs, &mu, &Limits::default()).unwrap();
        let text = render(rs.lie_type(), &ws);
        assert!(text.starts_with("type B3 highest 0 0 1\n"));
        assert_eq!(text.lines().count(), 9);
        let record = parse(&text, Path::new("x")).unwrap();
        assert_eq!(record.dim(), 8);
        assert_eq!(record.highest_weight, vec![0, 0, 1]);
    }

    #[test]
    fn lines_are_sorted_by_label_vector() {
        let rs = build_root_system(LieType::new(Family::G, 2).unwrap()).unwrap();
        let mu = rs.weight(vec![1, 0]).unwrap();
        let ws = weight_system(&rs, &mu, &Limits::default()).unwrap();
        let text = render(rs.lie_type(), &ws);
        let rows: Vec<Vec<i64>> = text
            .lines()
            .skip(1)
            .map(|l| l.split(':').next().unwrap().split_whitespace().map(|x| x.parse().unwrap()).collect())
            .collect();
        let mut sorted = rows.clone();
        sorted.sort();
        assert_eq!(rows, sorted);
    }

    #[test]
    fn malformed_files_are_reported_with_line_numbers() {
        let err = parse("type B3 highest 0 0 1\n1 0 : 1\n", Path::new("f")).unwrap_err();
        assert!(matches!(err, CacheError::Malformed { line: 2, .. }));
        assert!(parse("", Path::new("f")).is_err());
        assert!(parse("type Q3 highest 0 0 1\n", Path::new("f")).is_err());
    }

    #[test]
    fn file_names_encode_type_and_labels() {
        let t = LieType::new(Family::D, 5).unwrap();
        assert_eq!(WeightCache::file_name(t, &[0, 0, 0, 0, 1]), "D5-0_0_0_0_1.wts");
    }
}
