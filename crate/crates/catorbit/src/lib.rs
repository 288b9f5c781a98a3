//! Command-line front end and file formats for `catorbit-core`.

pub mod cli;
pub mod export;
