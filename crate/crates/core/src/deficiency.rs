//! Deficiency: the least number of universal vertices whose join gives a
//! graph a chosen spanning property.
//!
//! The scan walks t upward through the feasible residue class and stops at
//! the first success. Stopping early is justified by a monotone step: if
//! `G * K_t` has a factor then so does `G * K_{t+step}`, because the extra
//! vertices are pairwise adjacent and can be covered by whole tiles of
//! their own (any pattern embeds into a clique of its own order). For
//! Hamiltonicity the step is 1: a universal vertex can always be spliced
//! into an edge of an existing cycle.

use crate::error::Error;
use crate::factor::{h_factor, hamilton_cycle, kr_factor};
use crate::graph::Graph;

/// The spanning property a deficiency question is about.
#[derive(Clone, Debug)]
pub enum Property {
    /// Partition into cliques of this order; at least 3.
    KrFactor(usize),
    /// Partition into copies of this pattern; at least one vertex.
    HFactor(Graph),
    /// A spanning cycle.
    Hamiltonicity,
}

/// A deficiency question: graph, property, and an optional scan cap.
#[derive(Clone, Debug)]
pub struct DeficiencyQuery {
    graph: Graph,
    property: Property,
    t_cap: Option<usize>,
}

impl DeficiencyQuery {
    /// Validated constructor. Clique order below 3 and empty patterns are
    /// input errors; the raw solvers remain available for smaller cliques.
    pub fn new(graph: Graph, property: Property, t_cap: Option<usize>) -> Result<Self, Error> {
        match &property {
            Property::KrFactor(r) if *r < 3 => {
                return Err(Error::input(format!("clique order r = {r} must be at least 3")));
            }
            Property::HFactor(h) if h.n() == 0 => {
                return Err(Error::input("empty tile pattern"));
            }
            _ => {}
        }
        Ok(DeficiencyQuery {
            graph,
            property,
            t_cap,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn property(&self) -> &Property {
        &self.property
    }

    /// Scan step: the tile order for factors (yes at t implies yes at
    /// t + step), 1 for Hamiltonicity.
    fn step(&self) -> usize {
        match &self.property {
            Property::KrFactor(r) => *r,
            Property::HFactor(h) => h.n(),
            Property::Hamiltonicity => 1,
        }
    }

    /// First t >= 0 in the feasible residue class (factors need the tile
    /// order to divide n + t).
    fn scan_start(&self) -> usize {
        let step = self.step();
        (step - self.graph.n() % step) % step
    }

    /// Largest t the scan needs by default; the property provably holds
    /// there, so exhaustion only happens under a user-supplied cap.
    fn default_cap(&self) -> usize {
        let n = self.graph.n();
        match &self.property {
            // Give every original vertex r-1 private joined partners.
            Property::KrFactor(r) => (r - 1) * n,
            Property::HFactor(h) => {
                if h.is_bipartite().is_some() {
                    // Tiles can host up to half their vertices from the
                    // original graph on one colour class (no edges needed
                    // among them), so (n+t)/2 >= n slots suffice: the
                    // first residue-valid t >= n.
                    n + self.residue_gap(2 * n)
                } else {
                    // One original vertex per tile, inside its own clique.
                    (h.n() - 1) * n
                }
            }
            // Alternate original and joined vertices around the cycle;
            // below three vertices no cycle exists at all, so small graphs
            // need up to three.
            Property::Hamiltonicity => n.max(3),
        }
    }

    /// How far above `m` the next multiple of the step lies.
    fn residue_gap(&self, m: usize) -> usize {
        let step = self.step();
        (step - m % step) % step
    }

    /// Does `G * K_t` have the property? For Hamiltonicity, joins below
    /// three vertices never do.
    fn holds_at(&self, t: usize) -> Result<bool, Error> {
        let joined = self.graph.join(t);
        match &self.property {
            Property::KrFactor(r) => Ok(kr_factor(&joined, *r).is_some()),
            Property::HFactor(h) => Ok(h_factor(&joined, h)?.is_some()),
            Property::Hamiltonicity => {
                if joined.n() < 3 {
                    Ok(false)
                } else {
                    Ok(hamilton_cycle(&joined)?.is_some())
                }
            }
        }
    }
}

/// def(G): the least t >= 0 such that `G * K_t` has the property. Size
/// error when a user-supplied cap exhausts the scan first.
pub fn deficiency(q: &DeficiencyQuery) -> Result<usize, Error> {
    let cap = q.t_cap.unwrap_or_else(|| q.default_cap());
    let mut t = q.scan_start();
    while t <= cap {
        if q.holds_at(t)? {
            return Ok(t);
        }
        t += q.step();
    }
    Err(Error::size(format!(
        "no feasible t within cap {cap}; the scan is only exhaustive up to there"
    )))
}

/// One probe of the scan: does `G * K_t` contain a clique factor? Input
/// error for non-clique properties; this hook exists so the step-r
/// monotonicity behind the scan order stays independently testable.
pub fn deficiency_monotone_step(q: &DeficiencyQuery, t: usize) -> Result<bool, Error> {
    match q.property() {
        Property::KrFactor(_) => q.holds_at(t),
        _ => Err(Error::input(
            "monotone-step probe is defined for clique factors only",
        )),
    }
}
