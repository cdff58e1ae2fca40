//! Text formats, reports and the command line of `gamekit`.

pub mod cli;
pub mod error;
pub mod format;
pub mod report;
