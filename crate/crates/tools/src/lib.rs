//! File format, threaded counting and the `ehrhart` command line tool on
//! top of `ehrhart-core`.

pub mod cli;
pub mod commands;
pub mod crosscheck;
pub mod format;
pub mod parallel;

pub use cli::{Cli, Exit};
pub use commands::{run, Outcome};
pub use format::{parse_polytope_file, serialize_polytope, ParseError, ParseErrorKind, ParseOptions};
