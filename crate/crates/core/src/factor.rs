//! Exact spanning-structure solvers: clique factors, H-factors, Hamilton
//! cycles, and two closed-form sufficiency predicates.
//!
//! Every solver is a deterministic backtracking search. The branching rule
//! is fixed (always cover the lowest uncovered vertex, extend in ascending
//! vertex order), so a given input always yields the same certificate.
//! Pruning only ever removes branches that provably contain no solution;
//! absence answers are exhaustive.

use crate::bitset::VertexSet;
use crate::certificate::{FactorCertificate, TileKind};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::Rat;

// ================================================================
// K_r-factors
// ================================================================

/// A partition of the vertices into r-cliques, if one exists. Requires
/// `r >= 2`; `None` whenever `r` does not divide `n`.
///
/// Search: take the lowest uncovered vertex, branch over the r-cliques
/// containing it in ascending order. A branch dies early when some
/// uncovered vertex no longer has `r-1` uncovered neighbours.
pub fn kr_factor(g: &Graph, r: usize) -> Option<FactorCertificate> {
    debug_assert!(r >= 2);
    if g.n() % r != 0 {
        return None;
    }
    // A clique tile holds at most one vertex of an independent set, so any
    // independent set larger than n/r rules a factor out before searching.
    if greedy_independent_size(g) > g.n() / r {
        return None;
    }
    let mut uncovered = VertexSet::full(g.n());
    let mut tiles = Vec::with_capacity(g.n() / r);
    if cover_lowest(g, r, &mut uncovered, &mut tiles) {
        Some(FactorCertificate {
            kind: TileKind::Clique(r),
            tiles,
        })
    } else {
        None
    }
}

fn cover_lowest(
    g: &Graph,
    r: usize,
    uncovered: &mut VertexSet,
    tiles: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(v) = uncovered.first() else {
        return true;
    };
    for u in uncovered.iter() {
        if g.neighbours(u).intersection_count(uncovered) < r - 1 {
            return false;
        }
    }
    uncovered.remove(v);
    let candidates = g.neighbours(v).intersection(uncovered);
    let mut tile = vec![v];
    let found = grow_clique(g, r, &candidates, v, &mut tile, uncovered, tiles);
    uncovered.insert(v);
    found
}

fn grow_clique(
    g: &Graph,
    r: usize,
    candidates: &VertexSet,
    floor: usize,
    tile: &mut Vec<usize>,
    uncovered: &mut VertexSet,
    tiles: &mut Vec<Vec<usize>>,
) -> bool {
    if tile.len() == r {
        tiles.push(tile.clone());
        if cover_lowest(g, r, uncovered, tiles) {
            return true;
        }
        tiles.pop();
        return false;
    }
    if candidates.count() < r - tile.len() {
        return false;
    }
    for u in candidates.iter() {
        if u <= floor {
            continue;
        }
        let narrowed = candidates.intersection(g.neighbours(u));
        tile.push(u);
        uncovered.remove(u);
        if grow_clique(g, r, &narrowed, u, tile, uncovered, tiles) {
            return true;
        }
        uncovered.insert(u);
        tile.pop();
    }
    false
}

// ================================================================
// H-factors
// ================================================================

/// A partition of the vertices into tiles each inducing a copy of
/// `pattern`, if one exists. Input error on an empty pattern; `None`
/// whenever `|pattern|` does not divide `n`.
///
/// Search: the lowest uncovered vertex is put into a tile with every
/// ascending choice of companions, and each full tile is kept only if the
/// pattern embeds into it. Uncovered vertices with fewer uncovered
/// neighbours than the pattern's minimum degree kill the branch.
pub fn h_factor(g: &Graph, pattern: &Graph) -> Result<Option<FactorCertificate>, Error> {
    let h = pattern.n();
    if h == 0 {
        return Err(Error::input("empty tile pattern"));
    }
    if g.n() % h != 0 {
        return Ok(None);
    }
    let min_deg = pattern.min_degree().unwrap_or(0);
    let mut uncovered = VertexSet::full(g.n());
    let mut tiles = Vec::with_capacity(g.n() / h);
    let found = cover_lowest_h(g, pattern, min_deg, &mut uncovered, &mut tiles);
    Ok(found.then(|| FactorCertificate {
        kind: TileKind::Pattern(emit_graph6(pattern)),
        tiles,
    }))
}

fn cover_lowest_h(
    g: &Graph,
    pattern: &Graph,
    min_deg: usize,
    uncovered: &mut VertexSet,
    tiles: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(v) = uncovered.first() else {
        return true;
    };
    for u in uncovered.iter() {
        if g.neighbours(u).intersection_count(uncovered) < min_deg {
            return false;
        }
    }
    uncovered.remove(v);
    let mut tile = vec![v];
    let found = grow_tile(g, pattern, min_deg, v, &mut tile, uncovered, tiles);
    uncovered.insert(v);
    found
}

fn grow_tile(
    g: &Graph,
    pattern: &Graph,
    min_deg: usize,
    floor: usize,
    tile: &mut Vec<usize>,
    uncovered: &mut VertexSet,
    tiles: &mut Vec<Vec<usize>>,
) -> bool {
    if tile.len() == pattern.n() {
        if !pattern_fits(pattern, tile, g) {
            return false;
        }
        tiles.push(tile.clone());
        if cover_lowest_h(g, pattern, min_deg, uncovered, tiles) {
            return true;
        }
        tiles.pop();
        return false;
    }
    let needed = pattern.n() - tile.len();
    let mut rest: Vec<usize> = uncovered.iter().filter(|&u| u > floor).collect();
    if rest.len() < needed {
        return false;
    }
    rest.truncate(rest.len() - (needed - 1));
    for u in rest {
        tile.push(u);
        uncovered.remove(u);
        if grow_tile(g, pattern, min_deg, u, tile, uncovered, tiles) {
            return true;
        }
        uncovered.insert(u);
        tile.pop();
    }
    false
}

/// Solver-side embedding check: can the tile's vertices play the pattern's
/// roles? Assigns tile slots to pattern vertices by backtracking. Kept
/// separate from the certificate validator on purpose: a certificate is
/// only evidence if its checker shares nothing with the search that
/// produced it.
fn pattern_fits(pattern: &Graph, tile: &[usize], g: &Graph) -> bool {
    let k = pattern.n();
    let mut role_of = vec![usize::MAX; k];
    fn fill(
        pattern: &Graph,
        tile: &[usize],
        g: &Graph,
        slot: usize,
        role_of: &mut Vec<usize>,
    ) -> bool {
        if slot == tile.len() {
            return true;
        }
        for role in 0..pattern.n() {
            if role_of.contains(&role) {
                continue;
            }
            let ok = (0..slot).all(|earlier| {
                !pattern.has_edge(role_of[earlier], role)
                    || g.has_edge(tile[earlier], tile[slot])
            });
            if ok {
                role_of[slot] = role;
                if fill(pattern, tile, g, slot + 1, role_of) {
                    return true;
                }
                role_of[slot] = usize::MAX;
            }
        }
        false
    }
    fill(pattern, tile, g, 0, &mut role_of)
}

// ================================================================
// Hamilton cycles
// ================================================================

/// A Hamilton cycle as a single-tile certificate in visiting order, if one
/// exists. Input error for `n < 3`, where no cycle is defined.
///
/// Cheap cutoffs first: minimum degree 2, connectivity, and a greedy
/// independent set (any independent set larger than `n/2` rules out a
/// Hamilton cycle, since the cycle alternates around it). The search grows
/// a path from vertex 0 in ascending neighbour order; a branch dies when
/// some unvisited vertex has fewer than two available cycle-neighbours.
pub fn hamilton_cycle(g: &Graph) -> Result<Option<FactorCertificate>, Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::input(format!("Hamilton cycles need n >= 3, got {n}")));
    }
    if g.min_degree().unwrap_or(0) < 2 || !is_connected(g) || greedy_independent_size(g) > n / 2 {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    path.push(0);
    let mut visited = VertexSet::empty(n);
    visited.insert(0);
    if extend_path(g, &mut path, &mut visited) {
        Ok(Some(FactorCertificate {
            kind: TileKind::Cycle,
            tiles: vec![path],
        }))
    } else {
        Ok(None)
    }
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, visited: &mut VertexSet) -> bool {
    if path.len() == g.n() {
        return g.has_edge(*path.last().unwrap(), path[0]);
    }
    let end = *path.last().unwrap();
    for u in g.neighbours(end).iter() {
        if visited.contains(u) {
            continue;
        }
        visited.insert(u);
        path.push(u);
        if ends_reachable(g, path, visited) && extend_path(g, path, visited) {
            return true;
        }
        path.pop();
        visited.remove(u);
    }
    false
}

/// Every unvisited vertex still needs two neighbours on the final cycle,
/// drawn from the unvisited vertices and the two open path ends.
fn ends_reachable(g: &Graph, path: &[usize], visited: &VertexSet) -> bool {
    let start = path[0];
    let end = *path.last().unwrap();
    for u in 0..g.n() {
        if visited.contains(u) {
            continue;
        }
        let row = g.neighbours(u);
        let mut avail = row.count() - row.intersection_count(visited);
        if row.contains(end) {
            avail += 1;
        }
        if row.contains(start) {
            avail += 1;
        }
        if avail < 2 {
            return false;
        }
    }
    true
}

fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut reached = VertexSet::empty(n);
    reached.insert(0);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in g.neighbours(u).iter() {
            if !reached.contains(v) {
                reached.insert(v);
                stack.push(v);
            }
        }
    }
    reached.count() == n
}

/// Greedily take the lowest vertex and discard its neighbourhood; the
/// result is an independent set, so its size is a lower bound on alpha.
fn greedy_independent_size(g: &Graph) -> usize {
    let mut free = VertexSet::full(g.n());
    let mut size = 0;
    while let Some(v) = free.first() {
        size += 1;
        free.remove(v);
        free.subtract(g.neighbours(v));
    }
    size
}

// ================================================================
// Sufficiency predicates
// ================================================================

/// Minimum-degree sufficiency for K_r-factors: true iff `r | n` and
/// `r * delta(G) >= (r-1) * n`. True guarantees `kr_factor` succeeds on
/// large enough graphs; at desk scale the implication is a tested
/// invariant, not an assumption. Requires `r >= 2`.
pub fn hajnal_szemeredi_guarantee(g: &Graph, r: usize) -> bool {
    debug_assert!(r >= 2);
    if g.n() % r != 0 {
        return false;
    }
    let delta = g.min_degree().unwrap_or(0);
    r * delta >= (r - 1) * g.n()
}

/// Degree-sequence sufficiency for Hamiltonicity: true iff the ascending
/// degree sequence `d_1 <= ... <= d_n` satisfies `d_i >= i + gamma * n`
/// for every integer `1 <= i < n/2`. Exact rational comparison; input
/// error unless `0 < gamma < 1`.
pub fn degree_sequence_condition(g: &Graph, gamma: Rat) -> Result<bool, Error> {
    let one = Rat::from_integer(1);
    let zero = Rat::from_integer(0);
    if gamma <= zero || gamma >= one {
        return Err(Error::input(format!("gamma = {gamma} must lie strictly in (0, 1)")));
    }
    let n = g.n();
    let slack = gamma * Rat::from_integer(n as i64);
    let degrees = g.degree_sequence();
    for (idx, &d) in degrees.values().iter().enumerate() {
        let i = idx + 1;
        if 2 * i >= n {
            break;
        }
        if Rat::from_integer(d as i64) < Rat::from_integer(i as i64) + slack {
            return Ok(false);
        }
    }
    Ok(true)
}
