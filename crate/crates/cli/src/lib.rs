//! Verification harness and report plumbing for the deficiency engine.
//!
//! The library half of the command-line tool: structured pass/fail
//! reports, exhaustive bound sweeps, and randomized stress trials for the
//! repair transforms. The binary in `main.rs` is argument parsing plus
//! serialization around these entry points.

pub mod repairs;
pub mod report;
pub mod sweeps;
