//! Exact graph invariants computed by bounded search.
//!
//! Everything here is exhaustive and deterministic: branch-and-bound for
//! independence, ordered backtracking for bandwidth, subset search for the
//! cover tripartition. Each search carries an explicit size gate; these are
//! desk-scale tools, not heuristics.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

/// Exact independence-number search gate: bitrow branch-and-bound is only
/// offered up to this many vertices.
pub const MAX_INDEPENDENCE_N: usize = 64;

/// Exact bandwidth search gate.
pub const MAX_BANDWIDTH_N: usize = 16;

// ================================================================
// Independence and cliques
// ================================================================

/// A maximum independent set, found by branch-and-bound over bitrows.
/// Deterministic: the pivot is the lowest-index minimum-degree candidate
/// and the include branch is explored first. Size error above
/// [`MAX_INDEPENDENCE_N`] vertices.
pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet, Error> {
    if g.n() > MAX_INDEPENDENCE_N {
        return Err(Error::size(format!(
            "exact independence search is limited to {MAX_INDEPENDENCE_N} vertices, got {}",
            g.n()
        )));
    }
    let mut best = VertexSet::empty(g.n());
    let mut current = Vec::new();
    extend_independent(g, &VertexSet::full(g.n()), &mut current, &mut best);
    Ok(best)
}

/// alpha(G): the size of a largest independent set.
pub fn independence_number(g: &Graph) -> Result<usize, Error> {
    Ok(maximum_independent_set(g)?.count())
}

/// omega(G), computed as the independence number of the complement.
pub fn clique_number(g: &Graph) -> Result<usize, Error> {
    independence_number(&g.complement())
}

fn extend_independent(
    g: &Graph,
    candidates: &VertexSet,
    current: &mut Vec<usize>,
    best: &mut VertexSet,
) {
    if current.len() + candidates.count() <= best.count() {
        return;
    }
    let Some(v) = min_degree_candidate(g, candidates) else {
        // Candidate set exhausted on a strictly better set.
        *best = VertexSet::from_indices(g.n(), current.iter().copied());
        return;
    };
    let mut include = candidates.clone();
    include.remove(v);
    include.subtract(g.neighbours(v));
    current.push(v);
    extend_independent(g, &include, current, best);
    current.pop();

    let mut exclude = candidates.clone();
    exclude.remove(v);
    extend_independent(g, &exclude, current, best);
}

fn min_degree_candidate(g: &Graph, candidates: &VertexSet) -> Option<usize> {
    let mut pick = None;
    let mut pick_deg = usize::MAX;
    for v in candidates.iter() {
        let deg = g.neighbours(v).intersection_count(candidates);
        if deg < pick_deg {
            pick = Some(v);
            pick_deg = deg;
        }
    }
    pick
}

// ================================================================
// Bandwidth
// ================================================================

/// A vertex labelling witnessing bandwidth at most `b`, or `None` when no
/// such labelling exists. `labels[v]` is the position of `v` in `0..n`;
/// every edge `uv` satisfies `|labels[u] - labels[v]| <= b`.
///
/// Exact backtracking over orderings, position by position, with three
/// prunes: a placed neighbour further than `b` positions back rejects the
/// candidate, the vertex falling out of the window must have no unplaced
/// neighbours, and the unplaced vertices' deadlines (`position of earliest
/// placed neighbour + b`) must be schedulable. Size error above
/// [`MAX_BANDWIDTH_N`] vertices.
pub fn bandwidth_at_most(g: &Graph, b: usize) -> Result<Option<Vec<usize>>, Error> {
    let n = g.n();
    if n > MAX_BANDWIDTH_N {
        return Err(Error::size(format!(
            "exact bandwidth search is limited to {MAX_BANDWIDTH_N} vertices, got {n}"
        )));
    }
    if n == 0 || b + 1 >= n {
        // Any ordering fits inside the window.
        return Ok(Some((0..n).collect()));
    }
    if clique_number(g)? > b + 1 {
        // A clique of size w occupies a position spread of at least w-1.
        return Ok(None);
    }
    let mut order = vec![usize::MAX; n];
    let mut pos = vec![usize::MAX; n];
    let mut placed = VertexSet::empty(n);
    if place_next(g, b, 0, &mut order, &mut pos, &mut placed) {
        let mut labels = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            labels[v] = p;
        }
        Ok(Some(labels))
    } else {
        Ok(None)
    }
}

fn place_next(
    g: &Graph,
    b: usize,
    p: usize,
    order: &mut Vec<usize>,
    pos: &mut Vec<usize>,
    placed: &mut VertexSet,
) -> bool {
    let n = g.n();
    if p == n {
        return true;
    }
    for v in 0..n {
        if placed.contains(v) {
            continue;
        }
        if !window_ok(g, b, p, v, pos, placed) {
            continue;
        }
        order[p] = v;
        pos[v] = p;
        placed.insert(v);
        let viable = frontier_ok(g, b, p, order, placed) && deadlines_ok(g, b, p, pos, placed);
        if viable && place_next(g, b, p + 1, order, pos, placed) {
            return true;
        }
        placed.remove(v);
        pos[v] = usize::MAX;
        order[p] = usize::MAX;
    }
    false
}

/// Every already-placed neighbour of `v` must lie within `b` positions.
fn window_ok(g: &Graph, b: usize, p: usize, v: usize, pos: &[usize], placed: &VertexSet) -> bool {
    g.neighbours(v)
        .intersection(placed)
        .iter()
        .all(|u| p - pos[u] <= b)
}

/// The vertex at position `p - b` has left the window: all its neighbours
/// must already be placed, since any future vertex lands too far away.
fn frontier_ok(g: &Graph, b: usize, p: usize, order: &[usize], placed: &VertexSet) -> bool {
    if p < b {
        return true;
    }
    g.neighbours(order[p - b]).is_subset_of(placed)
}

/// Each unplaced vertex with a placed neighbour must be scheduled by
/// `min(neighbour position) + b`. Sorting those deadlines and granting the
/// positions `p+1, p+2, ...` greedily is feasibility-optimal, so a violated
/// slot proves the branch dead.
fn deadlines_ok(g: &Graph, b: usize, p: usize, pos: &[usize], placed: &VertexSet) -> bool {
    let mut deadlines: Vec<usize> = Vec::new();
    for u in 0..g.n() {
        if placed.contains(u) {
            continue;
        }
        let mut earliest = usize::MAX;
        for w in g.neighbours(u).intersection(placed).iter() {
            earliest = earliest.min(pos[w]);
        }
        if earliest != usize::MAX {
            deadlines.push(earliest + b);
        }
    }
    deadlines.sort_unstable();
    deadlines
        .iter()
        .enumerate()
        .all(|(i, &deadline)| deadline >= p + 1 + i)
}

// ================================================================
// Cover tripartitions
// ================================================================

/// A partition `(rest, cover, covered)` of the vertices with
/// `|cover| = |covered| = t` and every `covered` vertex adjacent only to
/// `cover` vertices, or `None` when no such partition exists. This is the
/// shape a spanning subgraph must have inside the join of a
/// clique-plus-isolated-vertices graph with K_t: the isolated vertices can
/// only lean on the t joined ones.
///
/// Exhaustive search over independent t-subsets `covered` with joint
/// neighbourhood of size at most t; the cover is the neighbourhood padded
/// with the lowest free vertices.
pub fn cover_tripartition(g: &Graph, t: usize) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let m = g.n();
    if 2 * t > m {
        return None;
    }
    let mut covered = Vec::with_capacity(t);
    let mut hood = VertexSet::empty(m);
    pick_covered(g, t, 0, &mut covered, &mut hood).map(|(covered, cover)| {
        let mut rest = VertexSet::full(m);
        rest.subtract(&covered);
        rest.subtract(&cover);
        (rest, cover, covered)
    })
}

fn pick_covered(
    g: &Graph,
    t: usize,
    from: usize,
    covered: &mut Vec<usize>,
    hood: &mut VertexSet,
) -> Option<(VertexSet, VertexSet)> {
    let m = g.n();
    if covered.len() == t {
        let covered_set = VertexSet::from_indices(m, covered.iter().copied());
        if !hood.is_disjoint(&covered_set) || hood.count() > t {
            return None;
        }
        // Pad the neighbourhood to exactly t vertices from the rest.
        let mut cover = hood.clone();
        for v in 0..m {
            if cover.count() == t {
                break;
            }
            if !cover.contains(v) && !covered_set.contains(v) {
                cover.insert(v);
            }
        }
        return Some((covered_set, cover));
    }
    if m - from < t - covered.len() {
        return None;
    }
    for v in from..m {
        if hood.contains(v) {
            // v is adjacent to a chosen vertex: the set would not be
            // independent.
            continue;
        }
        let before = hood.clone();
        hood.union_with(g.neighbours(v));
        covered.push(v);
        if let Some(found) = pick_covered(g, t, v + 1, covered, hood) {
            return Some(found);
        }
        covered.pop();
        *hood = before;
    }
    None
}
