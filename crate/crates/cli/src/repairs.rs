//! Randomized stress trials for the factor-repair transforms.
//!
//! Each trial builds a random instance that satisfies the transform's
//! preconditions, runs the transform, and re-validates the rewired factor
//! against the original join. Instances are drawn from a seeded stream, so
//! a report is reproducible from its (seed, trials) pair alone. Any
//! contract error or failed validation on a well-formed instance is a
//! counterexample; the expected count is zero.

use crate::report::{param_map, Counterexample, VerificationReport};
use crate::sweeps::valid_t_values;
use defgraph_core::factor::kr_factor;
use defgraph_core::repair::{rewire_factor_clique, rewire_factor_vertex, saturate_edge_clique, saturate_vertex};
use defgraph_core::{emit_graph6, validate_certificate, Error, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Hard ceiling on generation attempts per requested trial, so degenerate
/// parameters fail loudly instead of spinning.
const ATTEMPTS_PER_TRIAL: u64 = 400;

fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    // Mixed densities, biased dense: the vertex transform's degree window
    // and the factor existence check both reject most sparse graphs.
    let p = 0.3 + 0.7 * rng.random::<f64>();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.random_range(0..items.len())])
    }
}

fn check_params(n_max: usize, r: usize, trials: u64) -> Result<(), Error> {
    if !(2..=12).contains(&n_max) {
        return Err(Error::input("repair trials support 2 <= n_max <= 12"));
    }
    if r < 3 {
        return Err(Error::input("clique order must be at least 3"));
    }
    if trials == 0 {
        return Err(Error::input("need at least one trial"));
    }
    Ok(())
}

/// Run vertex-rewiring trials: saturate a random window-eligible vertex,
/// tile the saturated join, rewire the tiling off the added edges, and
/// re-validate in the original join.
pub fn run_vertex_repair_trials(
    trials: u64,
    seed: u64,
    n_max: usize,
    r: usize,
    t_max: usize,
) -> Result<VerificationReport, Error> {
    check_params(n_max, r, trials)?;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0u64;
    let mut attempts = 0u64;
    let mut counterexamples = Vec::new();

    while done < trials {
        attempts += 1;
        if attempts > trials.saturating_mul(ATTEMPTS_PER_TRIAL) {
            return Err(Error::size(
                "exhausted generation attempts; parameters admit too few eligible instances",
            ));
        }
        let n = rng.random_range(2..=n_max);
        let ts: Vec<usize> = valid_t_values(n, r).into_iter().filter(|&t| t <= t_max).collect();
        let Some(&t) = pick(&mut rng, &ts) else { continue };
        let g = random_graph(&mut rng, n);
        let window = (t + 1).div_ceil(r - 1);
        let eligible: Vec<usize> =
            (0..n).filter(|&v| g.degree(v) + window > n - 1).collect();
        let Some(&v) = pick(&mut rng, &eligible) else { continue };
        let Some(tiling) = kr_factor(&saturate_vertex(&g, v).join(t), r) else { continue };

        // Preconditions hold; from here every failure is a counterexample.
        done += 1;
        let params = param_map([
            ("n", n.to_string()),
            ("t", t.to_string()),
            ("v", v.to_string()),
            ("trial", done.to_string()),
        ]);
        match rewire_factor_vertex(&g, t, v, &tiling) {
            Err(e) => counterexamples.push(Counterexample {
                graph6: emit_graph6(&g),
                params: with_failure(params, &format!("rewire failed: {e}")),
            }),
            Ok(rewired) => {
                if let Err(e) = validate_certificate(&g.join(t), &rewired) {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&g),
                        params: with_failure(params, &format!("validation failed: {e}")),
                    });
                }
            }
        }
    }

    Ok(VerificationReport::new(
        "repair-vertex",
        param_map([
            ("trials", trials.to_string()),
            ("seed", seed.to_string()),
            ("nmax", n_max.to_string()),
            ("r", r.to_string()),
            ("tmax", t_max.to_string()),
            ("attempts", attempts.to_string()),
        ]),
        done,
        counterexamples,
        started.elapsed(),
    ))
}

/// Run clique-rewiring trials: saturate a random edge's maximum clique,
/// tile the modified join, rewire the tiling off the clique boundary, and
/// re-validate in the original join.
pub fn run_edge_repair_trials(
    trials: u64,
    seed: u64,
    n_max: usize,
    r: usize,
    t_max: usize,
) -> Result<VerificationReport, Error> {
    check_params(n_max, r, trials)?;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0u64;
    let mut attempts = 0u64;
    let mut counterexamples = Vec::new();

    while done < trials {
        attempts += 1;
        if attempts > trials.saturating_mul(ATTEMPTS_PER_TRIAL) {
            return Err(Error::size(
                "exhausted generation attempts; parameters admit too few eligible instances",
            ));
        }
        let n = rng.random_range(2..=n_max);
        let ts: Vec<usize> = valid_t_values(n, r).into_iter().filter(|&t| t <= t_max).collect();
        let Some(&t) = pick(&mut rng, &ts) else { continue };
        let g = random_graph(&mut rng, n);
        let edges = g.edges();
        let Some(&(x, y)) = pick(&mut rng, &edges) else { continue };
        // The transform applies when the maximum clique through the edge
        // stays below the tile order.
        let Ok((modified, ctx)) = saturate_edge_clique(&g, x, y, r) else { continue };
        let Some(tiling) = kr_factor(&modified.join(t), r) else { continue };

        done += 1;
        let params = param_map([
            ("n", n.to_string()),
            ("t", t.to_string()),
            ("x", x.to_string()),
            ("y", y.to_string()),
            ("trial", done.to_string()),
        ]);
        match rewire_factor_clique(&modified, t, &ctx, &tiling) {
            Err(e) => counterexamples.push(Counterexample {
                graph6: emit_graph6(&g),
                params: with_failure(params, &format!("rewire failed: {e}")),
            }),
            Ok(rewired) => {
                if let Err(e) = validate_certificate(&g.join(t), &rewired) {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&g),
                        params: with_failure(params, &format!("validation failed: {e}")),
                    });
                } else if let Some(tile) = boundary_crossing_tile(&rewired.tiles, ctx.q(), n) {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&g),
                        params: with_failure(
                            params,
                            &format!("tile {tile:?} crosses the clique boundary"),
                        ),
                    });
                }
            }
        }
    }

    Ok(VerificationReport::new(
        "repair-edge",
        param_map([
            ("trials", trials.to_string()),
            ("seed", seed.to_string()),
            ("nmax", n_max.to_string()),
            ("r", r.to_string()),
            ("tmax", t_max.to_string()),
            ("attempts", attempts.to_string()),
        ]),
        done,
        counterexamples,
        started.elapsed(),
    ))
}

fn with_failure(
    mut params: std::collections::BTreeMap<String, String>,
    failure: &str,
) -> std::collections::BTreeMap<String, String> {
    params.insert("failure".into(), failure.into());
    params
}

/// A rewired tiling must never pair a saturated-clique vertex with an
/// original vertex outside the clique; joined vertices (index >= n) are
/// exempt. Returns an offending tile, if any.
fn boundary_crossing_tile<'a>(
    tiles: &'a [Vec<usize>],
    q: &[usize],
    n: usize,
) -> Option<&'a Vec<usize>> {
    tiles.iter().find(|tile| {
        let hits_q = tile.iter().any(|v| q.contains(v));
        let hits_outside = tile.iter().any(|v| *v < n && !q.contains(v));
        hits_q && hits_outside
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_trials_pass_and_reproduce() {
        let a = run_vertex_repair_trials(200, 7, 8, 3, 4).unwrap();
        assert!(a.passed(), "{:?}", a.counterexamples);
        assert_eq!(a.graphs_checked, 200);
        let b = run_vertex_repair_trials(200, 7, 8, 3, 4).unwrap();
        assert_eq!(a.params, b.params);
        assert_eq!(a.counterexamples, b.counterexamples);
    }

    #[test]
    fn edge_trials_pass_and_reproduce() {
        let a = run_edge_repair_trials(200, 11, 8, 3, 4).unwrap();
        assert!(a.passed(), "{:?}", a.counterexamples);
        assert_eq!(a.graphs_checked, 200);
        let b = run_edge_repair_trials(200, 11, 8, 3, 4).unwrap();
        assert_eq!(a.params, b.params);
    }

    #[test]
    fn trials_reject_bad_parameters() {
        assert!(run_vertex_repair_trials(0, 1, 8, 3, 4).is_err());
        assert!(run_vertex_repair_trials(10, 1, 1, 3, 4).is_err());
        assert!(run_edge_repair_trials(10, 1, 8, 2, 4).is_err());
    }
}
