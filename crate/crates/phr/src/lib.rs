//! Command-line front end, on-disk weight-system cache and report formats
//! for `phr-core`.

#![forbid(unsafe_code)]

pub mod cache;
pub mod cli;
pub mod config;
pub mod report;
pub mod run;

pub use cache::{InspectedFile, WeightCache};
pub use config::{CliConfig, OutputFormat, Threads};
