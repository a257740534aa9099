//! Library side of the `ramcalc` tool: input decoding, the per-subcommand
//! reports, plotting and the verification suite.

pub mod commands;
pub mod error;
pub mod input;
pub mod plot;
pub mod suite;

pub use error::CliError;
