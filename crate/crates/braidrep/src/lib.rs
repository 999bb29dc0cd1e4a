//! Command line, report output and JSON file formats for `braidrep-core`.

pub mod cli;
pub mod files;
pub mod json;
