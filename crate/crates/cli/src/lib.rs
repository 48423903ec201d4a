//! Command-line harness for `sixpoint-core`: configuration documents,
//! reports, seeded generation and differential fuzzing.

pub mod commands;
pub mod config;
pub mod error;
pub mod fuzz;
pub mod gen;
pub mod report;

pub use commands::{run_area, run_check, run_construct, run_embed, Outcome};
pub use config::{ConfigDoc, RawConfig};
pub use error::{exit, CliError, Result};
pub use fuzz::{replay_trial, run_fuzz, FuzzConfig};
pub use report::{Format, Report};
