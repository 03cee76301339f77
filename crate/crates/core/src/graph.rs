//! Undirected graphs on labelled vertices `0..n` with bitset adjacency rows.
//!
//! Invariants maintained by every operation: adjacency is symmetric, there
//! are no self-loops, and every vertex in `clique_mark` is adjacent to all
//! other vertices. The mark records which vertices were added by the most
//! recent [`Graph::join`]; structural edits that would break its guarantee
//! clear the affected marks instead of erroring.

use crate::bitset::VertexSet;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    clique_mark: VertexSet,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            clique_mark: VertexSet::empty(n),
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n,
            adj,
            clique_mark: VertexSet::empty(n),
        }
    }

    /// Cycle C_n on vertices `0..n` in natural order. For n <= 2 there is
    /// no cycle; the result degenerates to K_n.
    pub fn cycle(n: usize) -> Self {
        if n <= 2 {
            return Graph::complete(n);
        }
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Disjoint union: `other`'s vertices are shifted up by `self.n()`.
    /// Marks are dropped, since no vertex stays universal.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let m = self.n + other.n;
        let mut adj: Vec<VertexSet> = self.adj.iter().map(|row| row.resized(m)).collect();
        for v in 0..other.n {
            let mut row = VertexSet::empty(m);
            for u in other.adj[v].iter() {
                row.insert(u + self.n);
            }
            adj.push(row);
        }
        Graph {
            n: m,
            adj,
            clique_mark: VertexSet::empty(m),
        }
    }

    /// Build from an explicit edge list. Self-loops, out-of-range endpoints
    /// and duplicate edges are input errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::input(format!("duplicate edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    /// Minimum degree; `None` on the empty vertex set.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Insert an edge (idempotent). Panics on self-loops or out-of-range
    /// endpoints in debug builds.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Remove an edge (idempotent). A marked endpoint loses its mark: the
    /// mark promises adjacency to every other vertex.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.clique_mark.remove(u);
        self.clique_mark.remove(v);
    }

    /// Vertices added by the most recent join; empty if never joined.
    pub fn clique_mark(&self) -> &VertexSet {
        &self.clique_mark
    }

    /// The join `G * K_t`: `t` new vertices `n..n+t`, pairwise adjacent and
    /// adjacent to every original vertex. The result's mark is exactly the
    /// new vertices; `e(G * K_t) = e(G) + t n + C(t, 2)`.
    pub fn join(&self, t: usize) -> Graph {
        let m = self.n + t;
        let mut adj = Vec::with_capacity(m);
        let tail = {
            let mut s = VertexSet::full(m);
            for v in 0..self.n {
                s.remove(v);
            }
            s
        };
        for v in 0..self.n {
            let mut row = self.adj[v].resized(m);
            row.union_with(&tail);
            adj.push(row);
        }
        for v in self.n..m {
            let mut row = VertexSet::full(m);
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n: m,
            adj,
            clique_mark: tail,
        }
    }

    /// Complement on the same vertex set. Marks are dropped: a marked vertex
    /// of the complement is isolated, not universal.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = full.difference(&self.adj[v]);
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n: self.n,
            adj,
            clique_mark: VertexSet::empty(self.n),
        }
    }

    /// Equality of adjacency alone, ignoring clique marks.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// Edges as sorted pairs (u < v), in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted in non-decreasing order.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        DegreeSequence(d)
    }

    /// Two-colouring witness `(left, right)` if the graph is bipartite, with
    /// each component's lowest vertex placed on the left.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = Vec::new();
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            queue.push(root);
            while let Some(u) = queue.pop() {
                let cu = colour[u].unwrap();
                for v in self.adj[u].iter() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::empty(self.n);
        let mut right = VertexSet::empty(self.n);
        for (v, c) in colour.iter().enumerate() {
            match c {
                Some(false) => left.insert(v),
                Some(true) => right.insert(v),
                None => unreachable!(),
            }
        }
        Some((left, right))
    }

    /// Parse the fixture format: first significant line is the vertex count,
    /// each following line one edge `u v`. Blank lines and `#` comments are
    /// skipped.
    pub fn parse_adjacency_list(text: &str) -> Result<Graph, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::parse("missing vertex count line"))?
            .parse()
            .map_err(|_| Error::parse("vertex count is not a number"))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = (it.next(), it.next());
            let (u, v) = match (u, v, it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::parse(format!("expected `u v`, got {line:?}"))),
            };
            let u: usize = u
                .parse()
                .map_err(|_| Error::parse(format!("bad endpoint {u:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::parse(format!("bad endpoint {v:?}")))?;
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }

    /// Check the structural invariants; used by tests and debug assertions.
    pub fn check_invariants(&self) -> Result<(), Error> {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(Error::contract(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter() {
                if v >= self.n {
                    return Err(Error::contract(format!("row {u} mentions ghost vertex {v}")));
                }
                if !self.adj[v].contains(u) {
                    return Err(Error::contract(format!("asymmetric edge ({u}, {v})")));
                }
            }
        }
        for v in self.clique_mark.iter() {
            if v >= self.n || self.degree(v) != self.n - 1 {
                return Err(Error::contract(format!("marked vertex {v} not universal")));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?}", self.n, self.edges())?;
        if !self.clique_mark.is_empty() {
            write!(f, ", mark={:?}", self.clique_mark)?;
        }
        write!(f, ")")
    }
}

/// Vertex degrees in non-decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Sum of degrees, always even (every edge is counted twice).
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_edge_count_identity() {
        for n in 0..7 {
            for t in 0..7 {
                let g = Graph::complete(n);
                let j = g.join(t);
                assert_eq!(j.n(), n + t);
                assert_eq!(
                    j.edge_count(),
                    g.edge_count() + t * n + crate::choose2(t as i64) as usize
                );
                j.check_invariants().unwrap();
                assert_eq!(j.clique_mark().to_vec(), (n..n + t).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn join_of_join_matches_single_join_on_adjacency() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert!(g.join(a).join(b).same_adjacency(&g.join(a + b)));
            }
        }
    }

    #[test]
    fn complement_is_an_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (0, 5)]).unwrap();
        assert!(g.complement().complement().same_adjacency(&g));
        assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            6 * 5 / 2,
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn degree_sequence_is_sorted_with_even_sum() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let ds = g.degree_sequence();
        assert_eq!(ds.values(), &[1, 1, 1, 2, 3]);
        assert_eq!(ds.sum() % 2, 0);
    }

    #[test]
    fn bipartite_detection() {
        let even_cycle = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let (l, r) = even_cycle.is_bipartite().unwrap();
        assert_eq!(l.count() + r.count(), 6);
        for (u, v) in even_cycle.edges() {
            assert!(l.contains(u) != l.contains(v));
        }
        let odd_cycle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(odd_cycle.is_bipartite().is_none());
    }

    #[test]
    fn adjacency_list_fixtures_parse() {
        let g = Graph::parse_adjacency_list("# a comment\n4\n0 1\n\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert!(Graph::parse_adjacency_list("").is_err());
        assert!(Graph::parse_adjacency_list("3\n0 1 2").is_err());
        assert!(Graph::parse_adjacency_list("3\n0 x").is_err());
    }

    #[test]
    fn cycle_and_disjoint_union() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degree_sequence().values().iter().all(|&d| d == 2));
        assert_eq!(Graph::cycle(2).edge_count(), 1);
        assert_eq!(Graph::cycle(0).n(), 0);

        let two = Graph::complete(3).disjoint_union(&Graph::cycle(4));
        assert_eq!(two.n(), 7);
        assert_eq!(two.edge_count(), 3 + 4);
        assert!(two.has_edge(3, 4) && !two.has_edge(2, 3));
        two.check_invariants().unwrap();
    }

    #[test]
    fn remove_edge_clears_affected_marks() {
        let mut j = Graph::complete(3).join(2);
        assert_eq!(j.clique_mark().count(), 2);
        j.remove_edge(3, 0);
        assert!(!j.clique_mark().contains(3));
        assert!(j.clique_mark().contains(4));
        j.check_invariants().unwrap();
    }
}
