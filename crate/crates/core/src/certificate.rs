//! Certificates for spanning structures and their independent validator.
//!
//! Solvers return a [`FactorCertificate`]; nothing in this module is shared
//! with any solver's search logic, so a certificate accepted here is
//! evidence, not an echo. Validation checks exact coverage (every vertex in
//! exactly one tile) and then the per-kind structure of each tile.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// What each tile of a certificate must induce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TileKind {
    /// Every tile is a clique on exactly this many vertices.
    Clique(usize),
    /// Every tile carries an isomorphic copy of the pattern graph, stored
    /// as its graph6 string so certificates are self-contained.
    Pattern(String),
    /// A single tile listing a Hamilton cycle in visiting order.
    Cycle,
}

/// A spanning structure: vertex tiles plus the kind they must satisfy.
///
/// Tiles are vertex lists. For [`TileKind::Cycle`] the order is the cycle
/// order; for the other kinds it is irrelevant. Serializes to JSON as
/// plain arrays for report output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub kind: TileKind,
    pub tiles: Vec<Vec<usize>>,
}

/// Check a certificate against a graph. Contract error on any violation:
/// incomplete or overlapping coverage, out-of-range vertices, wrong tile
/// sizes, or a tile that does not induce its pattern. Parse error only for
/// a malformed embedded pattern string.
pub fn validate_certificate(g: &Graph, cert: &FactorCertificate) -> Result<(), Error> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut covered = 0usize;
    for tile in &cert.tiles {
        for &v in tile {
            if v >= n {
                return Err(Error::contract(format!(
                    "tile vertex {v} out of range for {n} vertices"
                )));
            }
            if seen[v] {
                return Err(Error::contract(format!("vertex {v} covered twice")));
            }
            seen[v] = true;
            covered += 1;
        }
    }
    if covered != n {
        return Err(Error::contract(format!(
            "tiles cover {covered} of {n} vertices"
        )));
    }
    match &cert.kind {
        TileKind::Clique(r) => {
            for tile in &cert.tiles {
                if tile.len() != *r {
                    return Err(Error::contract(format!(
                        "clique tile has {} vertices, expected {r}",
                        tile.len()
                    )));
                }
                for (i, &u) in tile.iter().enumerate() {
                    for &v in &tile[i + 1..] {
                        if !g.has_edge(u, v) {
                            return Err(Error::contract(format!(
                                "clique tile misses edge ({u}, {v})"
                            )));
                        }
                    }
                }
            }
        }
        TileKind::Pattern(text) => {
            let pattern = parse_graph6(text)?;
            for tile in &cert.tiles {
                if tile.len() != pattern.n() {
                    return Err(Error::contract(format!(
                        "pattern tile has {} vertices, expected {}",
                        tile.len(),
                        pattern.n()
                    )));
                }
                if !embeds_onto(&pattern, tile, g) {
                    return Err(Error::contract(format!(
                        "tile {tile:?} does not induce a copy of the pattern"
                    )));
                }
            }
        }
        TileKind::Cycle => {
            if cert.tiles.len() != 1 {
                return Err(Error::contract(format!(
                    "cycle certificate needs one tile, got {}",
                    cert.tiles.len()
                )));
            }
            let cycle = &cert.tiles[0];
            if cycle.len() < 3 {
                return Err(Error::contract(format!(
                    "cycle of length {} is not a cycle",
                    cycle.len()
                )));
            }
            for i in 0..cycle.len() {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if !g.has_edge(u, v) {
                    return Err(Error::contract(format!(
                        "cycle step ({u}, {v}) is not an edge"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Does some bijection from the pattern's vertices onto `tile` carry every
/// pattern edge to an edge of `g`? Backtracking over assignments in pattern
/// vertex order.
fn embeds_onto(pattern: &Graph, tile: &[usize], g: &Graph) -> bool {
    let k = pattern.n();
    debug_assert_eq!(tile.len(), k);
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    assign_next(pattern, tile, g, 0, &mut image, &mut used)
}

fn assign_next(
    pattern: &Graph,
    tile: &[usize],
    g: &Graph,
    p: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if p == pattern.n() {
        return true;
    }
    for slot in 0..tile.len() {
        if used[slot] {
            continue;
        }
        let candidate = tile[slot];
        let consistent = pattern
            .neighbours(p)
            .iter()
            .filter(|&q| q < p)
            .all(|q| g.has_edge(candidate, image[q]));
        if !consistent {
            continue;
        }
        image[p] = candidate;
        used[slot] = true;
        if assign_next(pattern, tile, g, p + 1, image, used) {
            return true;
        }
        used[slot] = false;
        image[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::emit_graph6;

    fn clique_cert(r: usize, tiles: &[&[usize]]) -> FactorCertificate {
        FactorCertificate {
            kind: TileKind::Clique(r),
            tiles: tiles.iter().map(|t| t.to_vec()).collect(),
        }
    }

    #[test]
    fn accepts_triangle_partition_of_k6() {
        let g = Graph::complete(6);
        let cert = clique_cert(3, &[&[0, 1, 2], &[3, 4, 5]]);
        validate_certificate(&g, &cert).unwrap();
    }

    #[test]
    fn rejects_coverage_violations() {
        let g = Graph::complete(6);
        let overlap = clique_cert(3, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(matches!(
            validate_certificate(&g, &overlap),
            Err(Error::Contract(_))
        ));
        let short = clique_cert(3, &[&[0, 1, 2]]);
        assert!(validate_certificate(&g, &short).is_err());
        let ghost = clique_cert(3, &[&[0, 1, 2], &[3, 4, 6]]);
        assert!(validate_certificate(&g, &ghost).is_err());
    }

    #[test]
    fn rejects_non_clique_tile() {
        let mut g = Graph::complete(6);
        g.remove_edge(0, 1);
        let cert = clique_cert(3, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(validate_certificate(&g, &cert).is_err());
        let wrong_size = clique_cert(2, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(validate_certificate(&g, &wrong_size).is_err());
    }

    #[test]
    fn cycle_certificates() {
        let g = Graph::cycle(5);
        let ok = FactorCertificate {
            kind: TileKind::Cycle,
            tiles: vec![vec![0, 1, 2, 3, 4]],
        };
        validate_certificate(&g, &ok).unwrap();
        let skip = FactorCertificate {
            kind: TileKind::Cycle,
            tiles: vec![vec![0, 2, 1, 3, 4]],
        };
        assert!(validate_certificate(&g, &skip).is_err());
        let split = FactorCertificate {
            kind: TileKind::Cycle,
            tiles: vec![vec![0, 1, 2], vec![3, 4]],
        };
        assert!(validate_certificate(&g, &split).is_err());
    }

    #[test]
    fn pattern_tiles_may_be_any_isomorphic_copy() {
        // Two path-shaped tiles inside C_6; tile order scrambled on purpose.
        let g = Graph::cycle(6);
        let mut path3 = Graph::empty(3);
        path3.add_edge(0, 1);
        path3.add_edge(1, 2);
        let cert = FactorCertificate {
            kind: TileKind::Pattern(emit_graph6(&path3)),
            tiles: vec![vec![2, 0, 1], vec![3, 5, 4]],
        };
        validate_certificate(&g, &cert).unwrap();

        // A triangle pattern cannot embed anywhere in C_6.
        let cert = FactorCertificate {
            kind: TileKind::Pattern(emit_graph6(&Graph::complete(3))),
            tiles: vec![vec![0, 1, 2], vec![3, 4, 5]],
        };
        assert!(validate_certificate(&g, &cert).is_err());

        let bad_pattern = FactorCertificate {
            kind: TileKind::Pattern("D?{{".into()),
            tiles: vec![vec![0, 1, 2, 3, 4], vec![5]],
        };
        assert!(matches!(
            validate_certificate(&Graph::cycle(6), &bad_pattern),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn empty_graph_certificates() {
        let g = Graph::empty(0);
        let cert = clique_cert(3, &[]);
        validate_certificate(&g, &cert).unwrap();
        let cyc = FactorCertificate {
            kind: TileKind::Cycle,
            tiles: vec![],
        };
        assert!(validate_certificate(&g, &cyc).is_err());
    }

    #[test]
    fn serializes_to_plain_json() {
        let cert = clique_cert(3, &[&[0, 1, 2]]);
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"tiles\":[[0,1,2]]"));
        let back: FactorCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
