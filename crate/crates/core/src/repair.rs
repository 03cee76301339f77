//! Factor-repair transforms: edge edits that concentrate degrees, plus the
//! rewiring maps that turn a clique factor of the edited join back into a
//! factor of the original join.
//!
//! Both rewiring procedures are exchange arguments. The vertex form trades
//! the saturated vertex `v` against a joined vertex of another tile; the
//! clique form reroutes every tile crossing the boundary of a clique `Q`
//! through joined vertices, so the result never uses an edge between `Q`
//! and the rest of the original vertices. Missing exchange partners are
//! contract errors: under the documented preconditions a counting argument
//! guarantees they exist, so their absence means a bug, not bad input.

use crate::bitset::VertexSet;
use crate::certificate::{validate_certificate, FactorCertificate, TileKind};
use crate::error::Error;
use crate::graph::Graph;

// ================================================================
// Vertex saturation and its rewiring
// ================================================================

/// `G` with every missing edge at `v` added, so `d(v) = n - 1`. All other
/// adjacencies are unchanged; `e` grows by exactly `n - 1 - d(v)`.
pub fn saturate_vertex(g: &Graph, v: usize) -> Graph {
    debug_assert!(v < g.n());
    let mut out = g.clone();
    for u in 0..g.n() {
        if u != v {
            out.add_edge(u, v);
        }
    }
    out
}

/// Convert a clique factor of `saturate_vertex(G, v) * K_t` into one of
/// `G * K_t`.
///
/// Requires the certificate to be a valid clique factor of the saturated
/// join with tile order `r >= 3`, and `v`'s original degree to satisfy
/// `d_G(v) > n - 1 - ceil((t+1)/(r-1))`; both are checked (contract
/// error). Three cases, tried in order:
///
/// (a) `v`'s tile already avoids the added edges: return the input.
/// (b) Some tile lies entirely among the joined vertices: swap `v` with
///     its lowest vertex; both resulting tiles are valid since joined
///     vertices are universal.
/// (c) Otherwise at least `ceil((t+1)/(r-1))` tiles touch `{v}` or the
///     joined clique, and the degree window leaves `v` with too few
///     non-neighbours to block them all: some touching tile consists of
///     `v`-neighbours and joined vertices only. Swap `v` with its lowest
///     joined vertex.
///
/// Choices are deterministic: the first eligible tile in certificate
/// order, the lowest eligible vertex inside it.
pub fn rewire_factor_vertex(
    g: &Graph,
    t: usize,
    v: usize,
    t_prime: &FactorCertificate,
) -> Result<FactorCertificate, Error> {
    let n = g.n();
    if v >= n {
        return Err(Error::input(format!("vertex {v} out of range for {n} vertices")));
    }
    let r = clique_order(t_prime)?;
    let saturated_join = saturate_vertex(g, v).join(t);
    validate_certificate(&saturated_join, t_prime)
        .map_err(|e| Error::contract(format!("certificate is not a factor of the saturated join: {e}")))?;
    let window = (t + 1).div_ceil(r - 1);
    if g.degree(v) + window < n {
        return Err(Error::contract(format!(
            "degree window violated: d({v}) = {} is not above n - 1 - {window}",
            g.degree(v)
        )));
    }

    let v_slot = t_prime
        .tiles
        .iter()
        .position(|tile| tile.contains(&v))
        .expect("validated certificate covers v");
    let v_tile = &t_prime.tiles[v_slot];

    // Case (a): the tile never relied on a saturation edge.
    let genuine = v_tile
        .iter()
        .all(|&w| w == v || w >= n || g.has_edge(v, w));
    if genuine {
        return Ok(t_prime.clone());
    }

    // Case (b): a tile entirely inside the joined clique.
    if let Some(slot) = t_prime.tiles.iter().position(|tile| tile.iter().all(|&w| w >= n)) {
        let u = *t_prime.tiles[slot].iter().min().expect("tiles are non-empty");
        return Ok(swap_between_tiles(t_prime, v_slot, v, slot, u));
    }

    // Case (c): a tile touching the joined clique, all of whose original
    // vertices are neighbours of v.
    for (slot, tile) in t_prime.tiles.iter().enumerate() {
        if slot == v_slot {
            continue;
        }
        let joined: Vec<usize> = tile.iter().copied().filter(|&w| w >= n).collect();
        if joined.is_empty() {
            continue;
        }
        if tile.iter().all(|&w| w >= n || g.has_edge(v, w)) {
            let u = *joined.iter().min().expect("non-empty by the check above");
            return Ok(swap_between_tiles(t_prime, v_slot, v, slot, u));
        }
    }
    Err(Error::contract(
        "no exchange tile found; the degree-window counting guarantee failed",
    ))
}

fn clique_order(cert: &FactorCertificate) -> Result<usize, Error> {
    match cert.kind {
        TileKind::Clique(r) if r >= 3 => Ok(r),
        TileKind::Clique(r) => Err(Error::input(format!(
            "rewiring needs clique tiles of order at least 3, got {r}"
        ))),
        _ => Err(Error::input("rewiring is defined for clique factors only")),
    }
}

/// Exchange `v` (in tile `a`) with `u` (in tile `b`), keeping tiles sorted
/// and in their original slots.
fn swap_between_tiles(
    cert: &FactorCertificate,
    a: usize,
    v: usize,
    b: usize,
    u: usize,
) -> FactorCertificate {
    let mut out = cert.clone();
    let replace = |tile: &mut Vec<usize>, from: usize, to: usize| {
        tile.retain(|&w| w != from);
        tile.push(to);
        tile.sort_unstable();
    };
    replace(&mut out.tiles[a], v, u);
    replace(&mut out.tiles[b], u, v);
    out
}

// ================================================================
// Edge-clique saturation and its rewiring
// ================================================================

/// The clique a boundary-avoiding rewiring pivots on: the lexicographically
/// least maximum clique `Q` through a designated edge `xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueContext {
    q: Vec<usize>,
    x: usize,
    y: usize,
}

impl CliqueContext {
    /// The pivot clique, sorted ascending.
    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn ell(&self) -> usize {
        self.q.len()
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }
}

/// Concentrate edges around the clique of an edge: delete every edge from
/// `x` to the outside of `Q`, then saturate every other vertex of `Q`
/// (`Q` = the lexicographically least maximum clique through `xy`).
///
/// Requires `xy` to be an edge lying in no clique of size `r` (input
/// errors otherwise). The result has at least as many edges as `G`: `x`
/// keeps `ell - 1` neighbours and the other `ell - 1` clique vertices
/// reach degree `n - 1`, so the degrees over `Q` sum to exactly
/// `n (ell - 1)`, which the original `Q`-degrees cannot exceed (a vertex
/// with `ell` neighbours in `Q` would extend the maximum clique).
pub fn saturate_edge_clique(
    g: &Graph,
    x: usize,
    y: usize,
    r: usize,
) -> Result<(Graph, CliqueContext), Error> {
    let n = g.n();
    if x >= n || y >= n || x == y {
        return Err(Error::input(format!("({x}, {y}) is not a vertex pair")));
    }
    if !g.has_edge(x, y) {
        return Err(Error::input(format!("({x}, {y}) is not an edge")));
    }
    let q = max_clique_through_edge(g, x, y);
    if q.len() >= r {
        return Err(Error::input(format!(
            "edge ({x}, {y}) lies in a clique of size {} >= r = {r}",
            q.len()
        )));
    }
    let q_set = VertexSet::from_indices(n, q.iter().copied());
    let mut out = g.clone();
    for w in g.neighbours(x).difference(&q_set).iter() {
        out.remove_edge(x, w);
    }
    for &c in &q {
        if c != x {
            for w in 0..n {
                if w != c {
                    out.add_edge(c, w);
                }
            }
        }
    }
    debug_assert!(out.edge_count() >= g.edge_count());
    Ok((out, CliqueContext { q, x, y }))
}

/// The maximum-cardinality clique containing the edge `xy`;
/// lexicographically least (as a sorted vertex list) among ties.
fn max_clique_through_edge(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let base = g.neighbours(x).intersection(g.neighbours(y));
    let mut best = sorted(vec![x, y]);
    let mut current = vec![x, y];
    grow_through(g, &base, 0, &mut current, &mut best);
    best
}

fn grow_through(
    g: &Graph,
    candidates: &VertexSet,
    from: usize,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    for u in candidates.iter() {
        if u < from {
            continue;
        }
        let narrowed = candidates.intersection(g.neighbours(u));
        current.push(u);
        let snapshot = sorted(current.clone());
        if snapshot.len() > best.len() || (snapshot.len() == best.len() && snapshot < *best) {
            *best = snapshot;
        }
        grow_through(g, &narrowed, u + 1, current, best);
        current.pop();
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Convert a clique factor of `G' * K_t` (the output of
/// [`saturate_edge_clique`]) into one that uses no edge between `Q` and
/// the other original vertices; such a factor is automatically a factor of
/// the pre-transform join, which agrees with `G' * K_t` inside `Q`,
/// outside `Q`, and on all joined vertices.
///
/// Construction: let `K^x` be the tile through `x` and `s` its number of
/// joined vertices. Every vertex of `K^x` lies in `Q` or the joined
/// clique, so `|Q \ K^x| = ell - r + s <= s` (contract error otherwise,
/// possible only when `ell >= r`). Map `Q \ K^x` into `K^x`'s joined
/// vertices by the ascending injection `f`; replace the `Q`-vertices of
/// every other tile by their images, and replace `K^x` by `Q` plus the
/// unused joined vertices of `K^x`.
pub fn rewire_factor_clique(
    g_prime: &Graph,
    t: usize,
    ctx: &CliqueContext,
    t_prime: &FactorCertificate,
) -> Result<FactorCertificate, Error> {
    let n = g_prime.n();
    let r = clique_order(t_prime)?;
    let joined_graph = g_prime.join(t);
    validate_certificate(&joined_graph, t_prime)
        .map_err(|e| Error::contract(format!("certificate is not a factor of the join: {e}")))?;

    let x_slot = t_prime
        .tiles
        .iter()
        .position(|tile| tile.contains(&ctx.x))
        .expect("validated certificate covers x");
    let x_tile = &t_prime.tiles[x_slot];

    let q_set = VertexSet::from_indices(n, ctx.q.iter().copied());
    let codomain: Vec<usize> = sorted(x_tile.iter().copied().filter(|&w| w >= n).collect());
    let domain: Vec<usize> = ctx
        .q
        .iter()
        .copied()
        .filter(|v| !x_tile.contains(v))
        .collect();
    if domain.len() > codomain.len() {
        return Err(Error::contract(format!(
            "injection impossible: |Q \\ K^x| = {} exceeds s = {}",
            domain.len(),
            codomain.len()
        )));
    }
    let image_of = |v: usize| {
        let at = domain.binary_search(&v).expect("domain membership checked");
        codomain[at]
    };

    let mut tiles = Vec::with_capacity(t_prime.tiles.len());
    for (slot, tile) in t_prime.tiles.iter().enumerate() {
        if slot == x_slot {
            // Q itself, plus the joined vertices of K^x left over by f.
            let mut fresh = ctx.q.clone();
            fresh.extend_from_slice(&codomain[domain.len()..]);
            tiles.push(sorted(fresh));
        } else {
            let fresh: Vec<usize> = tile
                .iter()
                .map(|&w| if w < n && q_set.contains(w) { image_of(w) } else { w })
                .collect();
            tiles.push(sorted(fresh));
        }
    }
    Ok(FactorCertificate {
        kind: TileKind::Clique(r),
        tiles,
    })
}
