//! Library half of the `cvejoin` command-line tool: edge-list I/O, report
//! documents, the subcommands, and the built-in verification suite.

pub mod commands;
pub mod io;
pub mod report;
pub mod suite;
