//! File formats, JSON reports, the threaded search driver and command
//! dispatch for the `qn` tool.

pub mod cli;
pub mod report;
pub mod solve;
pub mod witness;
