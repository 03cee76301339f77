//! Spanning embeddings: place every vertex of a pattern onto a distinct
//! host vertex so that pattern edges land on host edges.

use crate::error::Error;
use crate::graph::Graph;

/// Exact spanning-embedding search gate.
pub const MAX_EMBED_N: usize = 12;

/// An embedding of `pattern` onto all of `host` as a spanning subgraph:
/// `image[p]` is the host vertex carrying pattern vertex `p`, and every
/// pattern edge maps to a host edge. `None` when no embedding exists.
///
/// Input error when the vertex counts differ (the embedding must span);
/// size error above [`MAX_EMBED_N`] vertices.
///
/// Backtracking over pattern vertices in decreasing-degree order (most
/// constrained first), with a sorted-degree dominance precheck: if the
/// i-th smallest pattern degree exceeds the i-th smallest host degree, no
/// embedding can exist, because the i lowest-degree host vertices would
/// have to carry i pattern vertices of strictly smaller degree.
pub fn embed_spanning(pattern: &Graph, host: &Graph) -> Result<Option<Vec<usize>>, Error> {
    let n = pattern.n();
    if n != host.n() {
        return Err(Error::input(format!(
            "spanning embedding needs equal orders, got {} and {}",
            n,
            host.n()
        )));
    }
    if n > MAX_EMBED_N {
        return Err(Error::size(format!(
            "exact embedding search is limited to {MAX_EMBED_N} vertices, got {n}"
        )));
    }
    let p_sorted = pattern.degree_sequence();
    let h_sorted = host.degree_sequence();
    let dominated = p_sorted
        .values()
        .iter()
        .zip(h_sorted.values())
        .all(|(p, h)| p <= h);
    if !dominated {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if place(pattern, host, &order, 0, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn place(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    step: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if step == order.len() {
        return true;
    }
    let p = order[step];
    for candidate in 0..host.n() {
        if used[candidate] || host.degree(candidate) < pattern.degree(p) {
            continue;
        }
        let consistent = pattern.neighbours(p).iter().all(|q| {
            image[q] == usize::MAX || host.has_edge(candidate, image[q])
        });
        if !consistent {
            continue;
        }
        image[p] = candidate;
        used[candidate] = true;
        if place(pattern, host, order, step + 1, image, used) {
            return true;
        }
        used[candidate] = false;
        image[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_embedding(pattern: &Graph, host: &Graph, image: &[usize]) {
        let mut seen = vec![false; host.n()];
        for &v in image {
            assert!(!seen[v]);
            seen[v] = true;
        }
        for (u, v) in pattern.edges() {
            assert!(host.has_edge(image[u], image[v]));
        }
    }

    #[test]
    fn cycle_into_complete_graph() {
        let c6 = Graph::cycle(6);
        let k6 = Graph::complete(6);
        let image = embed_spanning(&c6, &k6).unwrap().unwrap();
        check_embedding(&c6, &k6, &image);
        // And never the other way: K_6 has edges C_6 lacks.
        assert!(embed_spanning(&k6, &c6).unwrap().is_none());
    }

    #[test]
    fn matching_into_cycle() {
        // A perfect matching on 6 vertices embeds into C_6.
        let m = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let image = embed_spanning(&m, &Graph::cycle(6)).unwrap().unwrap();
        check_embedding(&m, &Graph::cycle(6), &image);
    }

    #[test]
    fn host_without_spanning_cycle_is_rejected() {
        let c5 = Graph::cycle(5);
        let mut host = Graph::cycle(5);
        host.remove_edge(4, 0);
        host.add_edge(0, 2);
        // Same edge count, but vertex 4 now has degree 1.
        assert!(embed_spanning(&c5, &host).unwrap().is_none());
    }

    #[test]
    fn gates_and_shape_errors() {
        assert!(embed_spanning(&Graph::cycle(4), &Graph::complete(5)).is_err());
        assert!(embed_spanning(&Graph::empty(13), &Graph::empty(13)).is_err());
        let empty = Graph::empty(0);
        assert_eq!(embed_spanning(&empty, &empty).unwrap(), Some(vec![]));
    }

    #[test]
    fn degree_dominance_rejects_quickly() {
        // Star K_{1,5} needs a degree-5 host vertex; C_6 has none.
        let star = crate::extremal::star_graph(5);
        assert!(embed_spanning(&star, &Graph::cycle(6)).unwrap().is_none());
    }
}
