//! Batch front end for `szeta-core`: job specs, the `szeta` command line,
//! JSON/CSV output and the acceptance suite.

pub mod cli;
pub mod error;
pub mod job;
pub mod output;
pub mod run;
pub mod verify;

pub use szeta_core as core;
