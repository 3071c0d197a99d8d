//! Run configuration. Command-line flags win over `HG_*` environment
//! variables, which win over a TOML config file, which wins over defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use phr_core::Limits;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Tsv,
    #[default]
    Text,
}

/// Worker thread count for parallel searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Threads {
    #[default]
    Auto,
    Fixed(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("expected a positive thread count or `auto`, got `{s}`")),
            Ok(n) => Ok(Threads::Fixed(n)),
        }
    }
}

impl fmt::Display for Threads {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threads::Auto => f.write_str("auto"),
            Threads::Fixed(n) => write!(f, "{n}"),
        }
    }
}

impl<'de> Deserialize<'de> for Threads {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(usize),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(n) => Threads::from_str(&n.to_string()),
            Raw::Word(w) => Threads::from_str(&w),
        }
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub limits: Limits,
    pub output_format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
    pub threads: Threads,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            limits: Limits::default(),
            output_format: OutputFormat::Text,
            cache_dir: None,
            threads: Threads::Auto,
        }
    }
}

/// Settings read from a config file. Every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub rank_ceiling: Option<usize>,
    pub dim_ceiling: Option<u64>,
    pub sym_degree_ceiling: Option<u32>,
    pub output_format: Option<OutputFormat>,
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<Threads>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config file {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| ConfigError(format!("invalid config file {}: {e}", path.display())))
    }
}

/// Settings that came from flags or environment variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub rank_ceiling: Option<usize>,
    pub dim_ceiling: Option<u64>,
    pub sym_degree_ceiling: Option<u32>,
    pub output_format: Option<OutputFormat>,
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<Threads>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

impl CliConfig {
    pub fn resolve(overrides: Overrides, file: FileConfig) -> Result<Self, ConfigError> {
        let defaults = CliConfig::default();
        let limits = Limits {
            rank_ceiling: overrides.rank_ceiling.or(file.rank_ceiling).unwrap_or(defaults.limits.rank_ceiling),
            dim_ceiling: overrides.dim_ceiling.or(file.dim_ceiling).unwrap_or(defaults.limits.dim_ceiling),
            sym_degree_ceiling: overrides
                .sym_degree_ceiling
                .or(file.sym_degree_ceiling)
                .unwrap_or(defaults.limits.sym_degree_ceiling),
        };
        if limits.rank_ceiling == 0 || limits.dim_ceiling == 0 || limits.sym_degree_ceiling == 0 {
            return Err(ConfigError("ceilings must be positive".into()));
        }
        Ok(CliConfig {
            limits,
            output_format: overrides.output_format.or(file.output_format).unwrap_or(defaults.output_format),
            cache_dir: overrides.cache_dir.or(file.cache_dir),
            threads: overrides.threads.or(file.threads).unwrap_or(defaults.threads),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_beat_file_values_which_beat_defaults() {
        let file: FileConfig = toml::from_str("rank-ceiling = 8\ndim-ceiling = 500\nthreads = 3\n").unwrap();
        let overrides = Overrides { dim_ceiling: Some(900), ..Overrides::default() };
        let cfg = CliConfig::resolve(overrides, file).unwrap();
        assert_eq!(cfg.limits.rank_ceiling, 8);
        assert_eq!(cfg.limits.dim_ceiling, 900);
        assert_eq!(cfg.limits.sym_degree_ceiling, 64);
        assert_eq!(cfg.threads, Threads::Fixed(3));
        assert_eq!(cfg.output_format, OutputFormat::Text);
    }

    #[test]
    fn zero_ceiling_is_rejected() {
        let overrides = Overrides { rank_ceiling: Some(0), ..Overrides::default() };
        assert!(CliConfig::resolve(overrides, FileConfig::default()).is_err());
    }

    #[test]
    fn thread_counts_parse() {
        assert_eq!("auto".parse::<Threads>(), Ok(Threads::Auto));
        assert_eq!("4".parse::<Threads>(), Ok(Threads::Fixed(4)));
        assert!("0".parse::<Threads>().is_err());
        let file: FileConfig = toml::from_str("threads = \"auto\"\noutput-format = \"json\"\n").unwrap();
        assert_eq!(file.threads, Some(Threads::Auto));
        assert_eq!(file.output_format, Some(OutputFormat::Json));
    }

    #[test]
    fn unknown_file_keys_are_errors() {
        assert!(toml::from_str::<FileConfig>("rank_limit = 3\n").is_err());
    }
}
