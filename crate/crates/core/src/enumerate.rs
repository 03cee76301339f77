//! Exhaustive labelled-graph enumeration for desk-scale sweeps.
//!
//! A graph on `n` vertices is a bit mask over the `C(n, 2)` vertex pairs in
//! lexicographic order ((0,1), (0,2), ..., (n-2,n-1)), so the full labelled
//! universe is the mask range `0..2^C(n,2)`. Sweeps split that range into
//! chunks for parallel scanning; everything downstream of a mask is
//! deterministic. Isomorphism dedup is brute force by design: the canonical
//! form of a graph is the minimum mask over all `n!` vertex relabellings.

use crate::error::Error;
use crate::graph::Graph;

/// Largest `n` with `C(n, 2) <= 63`, so a mask fits in `u64`.
pub const MAX_LABELLED_N: usize = 11;
/// Brute-force canonical forms stay tractable through `8! = 40320` perms.
pub const MAX_ISO_N: usize = 8;

/// The vertex pairs indexing mask bits, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Number of labelled graphs on `n` vertices, `2^C(n,2)`.
pub fn labelled_count(n: usize) -> Result<u64, Error> {
    if n > MAX_LABELLED_N {
        return Err(Error::size(format!(
            "labelled enumeration supports n <= {MAX_LABELLED_N}, got {n}"
        )));
    }
    Ok(1u64 << (n * (n.max(1) - 1) / 2))
}

/// Materialize the graph for one mask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    write_mask_into(&mut g, n, mask);
    g
}

/// Overwrite `g` (which must have `n` vertices) with the mask's edges
/// without reallocating; the hot path of every sweep.
pub fn write_mask_into(g: &mut Graph, n: usize, mask: u64) {
    debug_assert_eq!(g.n(), n);
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
            k += 1;
        }
    }
}

/// Mask of an `n`-vertex graph (inverse of [`graph_from_mask`]).
pub fn mask_of_graph(g: &Graph) -> Result<u64, Error> {
    if g.n() > MAX_LABELLED_N {
        return Err(Error::size(format!(
            "masks support n <= {MAX_LABELLED_N}, got {}",
            g.n()
        )));
    }
    let mut mask = 0u64;
    for (k, (u, v)) in vertex_pairs(g.n()).into_iter().enumerate() {
        if g.has_edge(u, v) {
            mask |= 1 << k;
        }
    }
    Ok(mask)
}

/// Minimum mask over all vertex relabellings: equal for isomorphic graphs,
/// distinct otherwise. Exhaustive over `n!` permutations.
pub fn canonical_mask(n: usize, mask: u64) -> Result<u64, Error> {
    if n > MAX_ISO_N {
        return Err(Error::size(format!(
            "canonical forms support n <= {MAX_ISO_N}, got {n}"
        )));
    }
    let pairs = vertex_pairs(n);
    let index = |u: usize, v: usize| -> usize {
        // Lexicographic rank of the pair (u, v) with u < v.
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    };
    let mut best = mask;
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm: visits every permutation with one swap per step.
    let mut c = vec![0usize; n];
    let apply = |perm: &[usize], best: &mut u64| {
        let mut relabelled = 0u64;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                relabelled |= 1 << index(a, b);
            }
        }
        if relabelled < *best {
            *best = relabelled;
        }
    };
    apply(&perm, &mut best);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            apply(&perm, &mut best);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Ascending masks of one representative per isomorphism class: exactly the
/// masks that equal their own canonical form.
pub fn iso_class_masks(n: usize) -> Result<Vec<u64>, Error> {
    let total = labelled_count(n)?;
    if n > MAX_ISO_N {
        return Err(Error::size(format!(
            "isomorphism dedup supports n <= {MAX_ISO_N}, got {n}"
        )));
    }
    let mut reps = Vec::new();
    for mask in 0..total {
        if canonical_mask(n, mask)? == mask {
            reps.push(mask);
        }
    }
    Ok(reps)
}

/// Stream every graph on `n` vertices, optionally one per isomorphism class.
pub fn enumerate_graphs(
    n: usize,
    iso_dedup: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, Error> {
    if iso_dedup {
        let reps = iso_class_masks(n)?;
        Ok(Box::new(reps.into_iter().map(move |m| graph_from_mask(n, m))))
    } else {
        let total = labelled_count(n)?;
        Ok(Box::new((0..total).map(move |m| graph_from_mask(n, m))))
    }
}

/// Visit the masks of every graph on `n` vertices with maximum degree at
/// most `cap`, in ascending mask order. Recursion over pairs with degree
/// budgets keeps the walk proportional to the output, so this reaches
/// `n = 8` even where the full mask range would not.
pub fn for_each_degree_capped(n: usize, cap: usize, mut f: impl FnMut(u64)) {
    let pairs = vertex_pairs(n);
    let mut degrees = vec![0usize; n];
    // Deciding the highest bit first, clear before set, yields ascending
    // numeric order.
    fn recurse(
        pairs: &[(usize, usize)],
        k: usize,
        mask: u64,
        degrees: &mut [usize],
        cap: usize,
        f: &mut impl FnMut(u64),
    ) {
        if k == 0 {
            f(mask);
            return;
        }
        let (u, v) = pairs[k - 1];
        recurse(pairs, k - 1, mask, degrees, cap, f);
        if degrees[u] < cap && degrees[v] < cap {
            degrees[u] += 1;
            degrees[v] += 1;
            recurse(pairs, k - 1, mask | 1 << (k - 1), degrees, cap, f);
            degrees[u] -= 1;
            degrees[v] -= 1;
        }
    }
    recurse(&pairs, pairs.len(), 0, &mut degrees, cap, &mut f);
}

/// Complement at the mask level; pairs with [`crate::graph::Graph::complement`].
pub fn complement_mask(n: usize, mask: u64) -> u64 {
    let bits = n * (n.max(1) - 1) / 2;
    !mask & ((1u64 << bits) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_and_iso_counts_on_four_vertices() {
        assert_eq!(labelled_count(4).unwrap(), 64);
        assert_eq!(iso_class_masks(4).unwrap().len(), 11);
        // 1, 2, 4, 11 isomorphism classes on 1..=4 vertices.
        assert_eq!(iso_class_masks(1).unwrap().len(), 1);
        assert_eq!(iso_class_masks(2).unwrap().len(), 2);
        assert_eq!(iso_class_masks(3).unwrap().len(), 4);
    }

    #[test]
    fn masks_roundtrip_through_graphs() {
        for mask in 0..labelled_count(4).unwrap() {
            let g = graph_from_mask(4, mask);
            assert_eq!(mask_of_graph(&g).unwrap(), mask);
            assert_eq!(g.edge_count() as u32, mask.count_ones());
        }
    }

    #[test]
    fn canonical_masks_are_isomorphism_invariants() {
        // K_{1,3} and its relabellings share a canonical form; P_4 differs.
        let star = mask_of_graph(&Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap();
        let star2 = mask_of_graph(&Graph::from_edges(4, &[(3, 1), (3, 2), (3, 0)]).unwrap()).unwrap();
        let path = mask_of_graph(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        assert_eq!(
            canonical_mask(4, star).unwrap(),
            canonical_mask(4, star2).unwrap()
        );
        assert_ne!(
            canonical_mask(4, star).unwrap(),
            canonical_mask(4, path).unwrap()
        );
    }

    #[test]
    fn degree_capped_enumeration_matches_filtered_full_enumeration() {
        for n in 0..=5usize {
            for cap in 0..n.max(1) {
                let mut fast = Vec::new();
                for_each_degree_capped(n, cap, |m| fast.push(m));
                let slow: Vec<u64> = (0..labelled_count(n).unwrap())
                    .filter(|&m| {
                        let g = graph_from_mask(n, m);
                        (0..n).all(|v| g.degree(v) <= cap)
                    })
                    .collect();
                assert_eq!(fast, slow, "n = {n}, cap = {cap}");
            }
        }
    }

    #[test]
    fn enumerate_graphs_streams_both_modes() {
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert!(enumerate_graphs(12, false).is_err());
        assert!(enumerate_graphs(9, true).is_err());
    }
}
