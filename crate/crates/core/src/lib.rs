//! Exact engine for graph deficiency problems.
//!
//! The deficiency of a graph `G` with respect to a spanning property `P` is
//! the least `t >= 0` such that the join `G * K_t` (add `t` new vertices
//! adjacent to each other and to all of `G`) satisfies `P`. Everything here
//! is exact and deterministic: bitset graphs with joins, tiling and
//! Hamiltonicity solvers that emit independently checkable certificates,
//! the extremal constructions that sit just below each closed-form edge
//! bound, deficiency scans over the feasible residue class, and the two
//! factor rewiring transforms used to repair near-extremal graphs.

pub mod bitset;
pub mod certificate;
pub mod deficiency;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod repair;

pub use bitset::VertexSet;
pub use certificate::{validate_certificate, FactorCertificate, TileKind};
pub use error::Error;
pub use graph::{DegreeSequence, Graph};
pub use graph6::{emit_graph6, parse_graph6};

/// Exact rational scalar used by bound evaluators and degree predicates.
pub type Rat = num::rational::Ratio<i64>;

/// Binomial coefficient C(x, 2) as a signed integer; 0 for x < 2.
pub fn choose2(x: i64) -> i64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}
