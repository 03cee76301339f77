//! Error taxonomy shared across the crate.
//!
//! Four categories, chosen so a caller can map failures onto process exit
//! codes without string matching: input and size and parse errors are caller
//! mistakes (usage), contract errors mean a precondition that a transform is
//! entitled to assume was violated by the supplied data.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter fails the documented precondition of an operation.
    #[error("input error: {0}")]
    Input(String),
    /// The instance is larger than the exact search the operation performs.
    #[error("size error: {0}")]
    Size(String),
    /// Supplied data violates a contract the operation relies on
    /// (invalid certificate, missing proof-guaranteed object, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Malformed textual input (graph6 string, adjacency list, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
