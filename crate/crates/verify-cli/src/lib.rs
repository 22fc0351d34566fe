//! Theorem-replay harness: deterministic checks over the catalog bundles,
//! machine-readable reports, and the command-line interface.

pub mod checks;
pub mod cli;
pub mod randmod;
pub mod report;
