//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use phr_core::Family;

use crate::cache::WeightCache;
use crate::config::{CliConfig, FileConfig, OutputFormat, Overrides, Threads};
use crate::report::Render;
use crate::run::{self, RunResult};

#[derive(Debug, Parser)]
#[command(
    name = "phr",
    version,
    about = "Weight systems and principal grading elements of simple Lie algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Largest rank accepted.
    #[arg(long, global = true, env = "HG_RANK_CEILING")]
    pub rank_ceiling: Option<usize>,
    /// Largest module dimension whose weight system may be built.
    #[arg(long, global = true, env = "HG_DIM_CEILING")]
    pub dim_ceiling: Option<u64>,
    /// Largest degree `a` of the type A catalog entries `sym:a`.
    #[arg(long, global = true, env = "HG_SYM_CEILING")]
    pub sym_ceiling: Option<u32>,
    /// Worker threads, or `auto`.
    #[arg(long, global = true, env = "HG_THREADS")]
    pub threads: Option<Threads>,
    /// Directory of the on-disk weight-system cache.
    #[arg(long, global = true, env = "HG_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// TOML config file.
    #[arg(long, global = true, env = "HG_CONFIG")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Family letter, A to G.
    #[arg(value_parser = parse_family)]
    pub family: Family,
    pub rank: usize,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|()| format!("unknown family `{s}`; expected one of A B C D E F G"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the weight-multiplicity-free modules of a type.
    ListMf {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Print the weight system of an irreducible module.
    Weights {
        #[command(flatten)]
        ty: TypeArgs,
        /// Highest weight: Dynkin labels like `0,0,1`, or an alias.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Also print eigenvalues of the grading element `n1,…,nr`.
        #[arg(long)]
        grading: Option<String>,
    },
    /// Search for principal grading elements.
    Search {
        #[command(flatten)]
        ty: TypeArgs,
        /// Restrict to these highest weights (repeatable). Defaults to the
        /// whole catalog.
        #[arg(long, allow_hyphen_values = true)]
        mu: Vec<String>,
        /// For non-self-dual modules, also report gradings in which the dual
        /// highest weight carries the top eigenvalue.
        #[arg(long)]
        both_orientations: bool,
        /// Drop diagram-automorphism images of earlier solutions.
        #[arg(long)]
        dedupe: bool,
        /// Accept any grading with simple consecutive eigenvalues, including
        /// quaternionic modules.
        #[arg(long)]
        eigenvalues_only: bool,
        /// Skip the necessary-condition filters.
        #[arg(long)]
        no_filters: bool,
    },
    /// Recompute the embedded reference tables.
    Verify {
        /// Table id, id prefix such as `D`, or `all` (repeatable).
        #[arg(long, default_value = "all")]
        scope: Vec<String>,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum CacheAction {
    /// List cached weight systems with their dimensions.
    Inspect,
    /// Delete every cached weight-system file.
    Clear,
}

impl GlobalArgs {
    pub fn config(&self) -> RunResult<CliConfig> {
        let file = match &self.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let overrides = Overrides {
            rank_ceiling: self.rank_ceiling,
            dim_ceiling: self.dim_ceiling,
            sym_degree_ceiling: self.sym_ceiling,
            output_format: self.format,
            cache_dir: self.cache_dir.clone(),
            threads: self.threads,
        };
        Ok(CliConfig::resolve(overrides, file)?)
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> RunResult<i32> {
    let cfg = cli.global.config()?;
    let cache = match &cfg.cache_dir {
        Some(dir) => WeightCache::on_disk(dir)?,
        None => WeightCache::in_memory(),
    };
    let format = cfg.output_format;
    let (text, code) = match &cli.command {
        Command::ListMf { ty } => {
            let t = run::lie_type(ty.family, ty.rank)?;
            (run::list_mf(t, &cfg)?.render(format), 0)
        }
        Command::Weights { ty, mu, grading } => {
            let t = run::lie_type(ty.family, ty.rank)?;
            (run::weights(t, mu, grading.as_deref(), &cfg, &cache)?.render(format), 0)
        }
        Command::Search { ty, mu, both_orientations, dedupe, eigenvalues_only, no_filters } => {
            let t = run::lie_type(ty.family, ty.rank)?;
            let settings = run::search_settings(*both_orientations, *dedupe, *eigenvalues_only, *no_filters);
            let doc = run::search(t, mu, settings, &cfg, &cache)?;
            let code = if doc.incomplete() { 3 } else { 0 };
            (doc.render(format), code)
        }
        Command::Verify { scope } => {
            let doc = run::verify(scope, &cfg, &cache)?;
            let code = if doc.all_passed() { 0 } else { 1 };
            (doc.render(format), code)
        }
        Command::Cache { action } => {
            let doc = match action {
                CacheAction::Inspect => run::cache_inspect(&cache)?,
                CacheAction::Clear => run::cache_clear(&cache)?,
            };
            (doc.render(format), 0)
        }
    };
    for w in cache.take_warnings() {
        let _ = writeln!(err, "warning: {w}");
    }
    out.write_all(text.as_bytes())?;
    Ok(code)
}
