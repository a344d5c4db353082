//! File formats and command-line driver on top of `hopfknot-core`.

pub mod cli;
pub mod format;
