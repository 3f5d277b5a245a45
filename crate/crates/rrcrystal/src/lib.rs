//! Command-line front end for `rrcrystal-core`: text formats, the embedded
//! reference tables and the end-to-end coefficient check.

pub mod check;
pub mod cli;
pub mod format;
pub mod reference;
