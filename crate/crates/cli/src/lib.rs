//! Command-line front end: file I/O for the ciphers, analysis tables, key
//! sweeps and orbit dumps.

pub mod commands;
pub mod config;
mod error;
pub mod report;

pub use commands::{run, Cli, Command};
pub use config::{parse_config, Config, ConfigError};
pub use error::CliError;
pub use report::{orbit_dump, render_table, ReportFormat};
