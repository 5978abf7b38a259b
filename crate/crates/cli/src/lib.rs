//! Library side of the `congestion` command: JSON documents, fixtures, the
//! random instance generator and the subcommands themselves.

pub mod commands;
pub mod document;
pub mod fixtures;
pub mod generate;
