//! Command-line front end: argument parsing, run reports and the OEIS
//! b-file harness.

pub mod args;
pub mod bfile;
pub mod commands;
pub mod oeis;
pub mod report;

pub use commands::{run, Outcome};
pub use report::{exit, RunReport, Status};
