//! Config-driven containment experiments on top of the `symlab` core.
//!
//! [`config::parse_config`] reads and validates a JSON experiment file,
//! [`run::run`] executes it, and [`report`] turns the resulting bundle into
//! CSV, Markdown or JSON.

pub mod config;
pub mod report;
pub mod run;

pub use config::{parse_config, ConfigError, ConfigErrorKind, ExperimentConfig};
pub use report::Format;
pub use run::{run, Outcome, ReportBundle};

/// Exit code for configuration and usage errors.
pub const EXIT_CONFIG: i32 = 3;
