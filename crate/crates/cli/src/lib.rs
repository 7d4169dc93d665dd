//! Standard-library side of the toolkit: OEIS b-file ingestion, ASCII
//! rendering, and the command implementations behind the `motzkin` binary.

pub mod bfile;
pub mod commands;
pub mod render;

pub use commands::{CliError, Direction, Family};
