//! Exhaustive verification sweeps.
//!
//! Each sweep checks one closed-form claim against every graph in a finite
//! range and returns a [`VerificationReport`]. Graphs are enumerated as
//! edge bitmaps; the popcount screen (`e(G) <= bound` needs no solver call)
//! keeps full labelled ranges tractable. Reports are bit-identical for a
//! given parameter set no matter how many worker threads run the range.

use crate::report::{param_map, Counterexample, VerificationReport};
use defgraph_core::deficiency;
use defgraph_core::embed::embed_spanning;
use defgraph_core::enumerate::{iso_class_masks, labelled_count, write_mask_into};
use defgraph_core::extremal::{
    ex1_band, ex1_factor, ex2_band, ex2_factor, hamilton_bound, kr_bound, technical_quantities,
    RFactorParams,
};
use defgraph_core::factor::{hamilton_cycle, kr_factor};
use defgraph_core::invariants::{cover_tripartition, independence_number};
use defgraph_core::{emit_graph6, Error, Graph, Rat};
use rayon::prelude::*;
use std::time::Instant;

/// The valid join sizes for clique tiling at a given order: r | (n+t) and
/// t < (r-1) n.
pub fn valid_t_values(n: usize, r: usize) -> Vec<usize> {
    let first = (r - n % r) % r;
    (first..(r - 1) * n).step_by(r).collect()
}

fn rat_to_i64(value: Rat) -> i64 {
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// Scan a mask range in parallel chunks, preserving deterministic output
/// order. `check` returns a counterexample for a failing mask.
fn scan_masks(
    masks: MaskRange,
    check: impl Fn(u64, &mut Graph) -> Option<Counterexample> + Sync,
    n: usize,
) -> (u64, Vec<Counterexample>) {
    match masks {
        MaskRange::Labelled(total) => {
            let chunks = (rayon::current_num_threads() * 8).max(1) as u64;
            let size = total.div_ceil(chunks).max(1);
            let found: Vec<Counterexample> = (0..chunks)
                .into_par_iter()
                .flat_map_iter(|c| {
                    let lo = c * size;
                    let hi = ((c + 1) * size).min(total);
                    let mut buffer = Graph::empty(n);
                    let mut local = Vec::new();
                    for mask in lo..hi {
                        local.extend(check(mask, &mut buffer));
                    }
                    local
                })
                .collect();
            (total, found)
        }
        MaskRange::Classes(reps) => {
            let found: Vec<Counterexample> = reps
                .par_chunks(1024.max(reps.len() / (rayon::current_num_threads() * 8).max(1)))
                .flat_map_iter(|chunk| {
                    let mut buffer = Graph::empty(n);
                    let mut local = Vec::new();
                    for &mask in chunk {
                        local.extend(check(mask, &mut buffer));
                    }
                    local
                })
                .collect();
            (reps.len() as u64, found)
        }
    }
}

enum MaskRange {
    Labelled(u64),
    Classes(Vec<u64>),
}

fn mask_range(n: usize, iso_dedup: bool) -> Result<MaskRange, Error> {
    if iso_dedup {
        Ok(MaskRange::Classes(iso_class_masks(n)?))
    } else {
        Ok(MaskRange::Labelled(labelled_count(n)?))
    }
}

// ================================================================
// Clique-factor bound sweep
// ================================================================

/// For every graph in range with more edges than the clique-factor bound
/// allows, the joined graph must tile; the two extremal families must
/// attain their closed-form edge counts and never tile.
pub fn verify_kr_theorem(
    n_max: usize,
    r: usize,
    iso_dedup: bool,
) -> Result<VerificationReport, Error> {
    if n_max < 2 {
        return Err(Error::input("bound sweeps need n_max >= 2"));
    }
    if r < 3 {
        return Err(Error::input("clique order must be at least 3"));
    }
    if n_max > 7 && !iso_dedup {
        return Err(Error::size("labelled sweeps support n_max <= 7"));
    }
    let started = Instant::now();
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();

    for n in 2..=n_max {
        for t in valid_t_values(n, r) {
            let p = RFactorParams::new(n, t, r)?;
            let bound = rat_to_i64(kr_bound(&p).value);
            let (count, found) = scan_masks(
                mask_range(n, iso_dedup)?,
                |mask, buffer| {
                    if i64::from(mask.count_ones()) <= bound {
                        return None;
                    }
                    write_mask_into(buffer, n, mask);
                    if kr_factor(&buffer.join(t), r).is_some() {
                        return None;
                    }
                    Some(Counterexample {
                        graph6: emit_graph6(buffer),
                        params: param_map([
                            ("n", n.to_string()),
                            ("t", t.to_string()),
                            ("r", r.to_string()),
                            ("phase", "bound".to_string()),
                        ]),
                    })
                },
                n,
            );
            checked += count;
            counterexamples.extend(found);

            // Sharpness: both families sit at their closed forms and do
            // not tile after joining.
            let (sharp_checked, sharp_found) = check_sharpness(&p);
            checked += sharp_checked;
            counterexamples.extend(sharp_found);
        }
    }

    Ok(VerificationReport::new(
        "kr-bound",
        param_map([
            ("nmax", n_max.to_string()),
            ("r", r.to_string()),
            ("mode", if iso_dedup { "classes" } else { "labelled" }.to_string()),
        ]),
        checked,
        counterexamples,
        started.elapsed(),
    ))
}

fn check_sharpness(p: &RFactorParams) -> (u64, Vec<Counterexample>) {
    let mut found = Vec::new();
    let expected = [
        (
            "ex1",
            ex1_factor(p),
            defgraph_core::extremal::ex1_factor_edges(p),
        ),
        (
            "ex2",
            ex2_factor(p).expect("validated parameters always fit"),
            defgraph_core::extremal::ex2_factor_edges(p),
        ),
    ];
    for (family, graph, closed_form) in expected {
        let params = param_map([
            ("n", p.n().to_string()),
            ("t", p.t().to_string()),
            ("r", p.r().to_string()),
            ("phase", format!("sharpness-{family}")),
        ]);
        if graph.edge_count() as i64 != closed_form {
            found.push(Counterexample {
                graph6: emit_graph6(&graph),
                params: params.clone(),
            });
            continue;
        }
        if kr_factor(&graph.join(p.t()), p.r()).is_some() {
            found.push(Counterexample {
                graph6: emit_graph6(&graph),
                params,
            });
        }
    }
    (2, found)
}

/// Standalone sharpness sweep over every valid parameter triple with
/// n + t below a cap, for the listed clique orders.
pub fn verify_kr_sharpness(sum_max: usize, orders: &[usize]) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    for &r in orders {
        if r < 3 {
            return Err(Error::input("clique order must be at least 3"));
        }
        for n in 2..=sum_max {
            for t in valid_t_values(n, r) {
                if n + t > sum_max {
                    break;
                }
                let p = RFactorParams::new(n, t, r)?;
                let (c, found) = check_sharpness(&p);
                checked += c;
                counterexamples.extend(found);
            }
        }
    }
    Ok(VerificationReport::new(
        "kr-sharpness",
        param_map([
            ("sum_max", sum_max.to_string()),
            (
                "orders",
                orders.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","),
            ),
        ]),
        checked,
        counterexamples,
        started.elapsed(),
    ))
}

// ================================================================
// Hamiltonicity bound sweep
// ================================================================

/// For every graph in range with more edges than the Hamiltonicity bound,
/// the join must carry a spanning cycle; the two band families joined must
/// not, wherever they are defined (and non-trivial, for the isolated-set
/// family).
pub fn verify_hamilton_theorem(n_max: usize, iso_dedup: bool) -> Result<VerificationReport, Error> {
    if n_max < 1 {
        return Err(Error::input("bound sweeps need n_max >= 1"));
    }
    if n_max > 7 && !iso_dedup {
        return Err(Error::size("labelled sweeps support n_max <= 7"));
    }
    let started = Instant::now();
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();

    for n in 1..=n_max {
        for t in 0..=n {
            let bound = rat_to_i64(hamilton_bound(n, t).value);
            let (count, found) = scan_masks(
                mask_range(n, iso_dedup)?,
                |mask, buffer| {
                    if i64::from(mask.count_ones()) <= bound {
                        return None;
                    }
                    write_mask_into(buffer, n, mask);
                    let joined = buffer.join(t);
                    let ok = joined.n() >= 3
                        && hamilton_cycle(&joined).expect("join has >= 3 vertices").is_some();
                    if ok {
                        return None;
                    }
                    Some(Counterexample {
                        graph6: emit_graph6(buffer),
                        params: param_map([
                            ("n", n.to_string()),
                            ("t", t.to_string()),
                            ("phase", "bound".to_string()),
                        ]),
                    })
                },
                n,
            );
            checked += count;
            counterexamples.extend(found);

            // Band families: the big-independent-set family is never
            // Hamiltonian after joining; the isolated-set family is not
            // either, as long as it has both isolated and clique vertices.
            if let Ok(g) = ex1_band(n, t) {
                checked += 1;
                let joined = g.join(t);
                if joined.n() >= 3 && hamilton_cycle(&joined).unwrap().is_some() {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&g),
                        params: param_map([
                            ("n", n.to_string()),
                            ("t", t.to_string()),
                            ("phase", "band-ex1".to_string()),
                        ]),
                    });
                }
            }
            if (1..n).contains(&t) {
                if let Ok(g) = ex2_band(n, t) {
                    checked += 1;
                    let joined = g.join(t);
                    if joined.n() >= 3 && hamilton_cycle(&joined).unwrap().is_some() {
                        counterexamples.push(Counterexample {
                            graph6: emit_graph6(&g),
                            params: param_map([
                                ("n", n.to_string()),
                                ("t", t.to_string()),
                                ("phase", "band-ex2".to_string()),
                            ]),
                        });
                    }
                }
            }
        }
    }

    Ok(VerificationReport::new(
        "hamilton-bound",
        param_map([
            ("nmax", n_max.to_string()),
            ("mode", if iso_dedup { "classes" } else { "labelled" }.to_string()),
        ]),
        checked,
        counterexamples,
        started.elapsed(),
    ))
}

// ================================================================
// Obstruction-class containment
// ================================================================

/// How a spanning test graph is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanningPattern {
    /// Cycle through all n + t vertices.
    Cycle,
    /// Isolated vertex plus a cycle on the remaining n + t - 1.
    NearCycle,
    /// Disjoint copies of the complete bipartite K_{s,s}.
    BalancedBipartiteFactor(usize),
    /// Arbitrary graph, graph6-encoded; order must equal n + t.
    Graph6(String),
}

impl SpanningPattern {
    pub fn build(&self, order: usize) -> Result<Graph, Error> {
        match self {
            SpanningPattern::Cycle => {
                if order < 3 {
                    return Err(Error::input("a cycle needs at least 3 vertices"));
                }
                Ok(Graph::cycle(order))
            }
            SpanningPattern::NearCycle => {
                if order < 4 {
                    return Err(Error::input("vertex plus cycle needs at least 4 vertices"));
                }
                Ok(Graph::cycle(order - 1).disjoint_union(&Graph::empty(1)))
            }
            SpanningPattern::BalancedBipartiteFactor(s) => {
                let s = *s;
                if s == 0 || order % (2 * s) != 0 {
                    return Err(Error::input(format!(
                        "balanced bipartite tiles of size {} do not divide {order}",
                        2 * s
                    )));
                }
                let mut g = Graph::empty(order);
                for tile in 0..order / (2 * s) {
                    let base = tile * 2 * s;
                    for i in 0..s {
                        for j in s..2 * s {
                            g.add_edge(base + i, base + j);
                        }
                    }
                }
                Ok(g)
            }
            SpanningPattern::Graph6(text) => {
                let g = defgraph_core::parse_graph6(text)?;
                if g.n() != order {
                    return Err(Error::input(format!(
                        "pattern has {} vertices, expected {order}",
                        g.n()
                    )));
                }
                Ok(g)
            }
        }
    }
}

/// Decide which obstruction class a spanning graph belongs to, then assert
/// it does not embed into the corresponding band construction's join.
///
/// First class: bipartite with independence number exactly ceil((n+t)/2);
/// blocked by the big-independent-set family. Second class: bipartite with
/// no splitting of the vertices into (A, B, C), |B| = |C| = t, where C's
/// neighbourhoods lie inside B; blocked by the isolated-set family.
pub fn verify_h_classes(
    n: usize,
    t: usize,
    pattern: &SpanningPattern,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let order = n + t;
    let h = pattern.build(order)?;
    let alpha = independence_number(&h)?;
    let bipartite = h.is_bipartite().is_some();
    let in_first = bipartite && alpha == order.div_ceil(2);
    let in_second = bipartite && t <= n && cover_tripartition(&h, t).is_none();

    let mut checked = 1u64;
    let mut counterexamples = Vec::new();
    let mut params = param_map([
        ("n", n.to_string()),
        ("t", t.to_string()),
        ("pattern", format!("{pattern:?}")),
        ("in_independent_class", in_first.to_string()),
        ("in_cover_class", in_second.to_string()),
    ]);

    if in_first {
        match ex1_band(n, t) {
            Ok(g) => {
                checked += 1;
                if embed_spanning(&h, &g.join(t))?.is_some() {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&h),
                        params: param_map([
                            ("n", n.to_string()),
                            ("t", t.to_string()),
                            ("phase", "independent-class".to_string()),
                        ]),
                    });
                }
            }
            Err(_) => {
                params.insert("independent_class_family".into(), "undefined".into());
            }
        }
    }
    if in_second {
        match ex2_band(n, t) {
            Ok(g) => {
                checked += 1;
                if embed_spanning(&h, &g.join(t))?.is_some() {
                    counterexamples.push(Counterexample {
                        graph6: emit_graph6(&h),
                        params: param_map([
                            ("n", n.to_string()),
                            ("t", t.to_string()),
                            ("phase", "cover-class".to_string()),
                        ]),
                    });
                }
            }
            Err(_) => {
                params.insert("cover_class_family".into(), "undefined".into());
            }
        }
    }

    Ok(VerificationReport::new(
        "h-classes",
        params,
        checked,
        counterexamples,
        started.elapsed(),
    ))
}

// ================================================================
// Isolated-family growth arithmetic
// ================================================================

/// Exact integer sweep of the isolated-family growth inequality and its
/// side conditions.
///
/// For every (n, r, t) with n, r >= 3, (r-1) | (t+1), r | (n+t), and
/// t+1 < (r-1)(n-1): whenever the shrunken first family is strictly
/// smaller than the shrunken second (e(EX1(n-1,t+1)) < e(EX2(n-1,t+1))),
/// the second family grows by at least n-1 when t trades down. The sweep
/// also pins the exact arithmetic behind that implication: the growth
/// identity for the difference of the two EX2 counts, "growth holds iff
/// t <= g", "EX2 <= EX1 at the shrunken point iff f1 <= t <= f2", the
/// residue t = (r-1)(n-1) - 1 (mod r(r-1)) forced by the divisibility
/// hypotheses, the impossibility of an admissible t above f2, and
/// f1 <= g at every (n, r).
pub fn verify_ex2_growth(n_max: usize, r_max: usize) -> Result<VerificationReport, Error> {
    if n_max < 4 || r_max < 3 {
        return Err(Error::input("growth sweep needs n_max >= 4, r_max >= 3"));
    }
    let started = Instant::now();
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    let mut fail = |n: usize, r: usize, t: usize, claim: &str| {
        counterexamples.push(Counterexample {
            graph6: String::new(),
            params: param_map([
                ("n", n.to_string()),
                ("r", r.to_string()),
                ("t", t.to_string()),
                ("claim", claim.to_string()),
            ]),
        });
    };

    for r in 3..=r_max {
        for n in 4.max(r)..=n_max {
            let q = technical_quantities(n, r)?;
            checked += 1;
            if q.f1 > q.g {
                fail(n, r, 0, "f1<=g");
            }
            for t in 0..(r - 1) * (n - 1) {
                let hypotheses = (t + 1) % (r - 1) == 0
                    && (n + t) % r == 0
                    && t + 1 < (r - 1) * (n - 1);
                if !hypotheses {
                    continue;
                }
                checked += 1;
                let shrunk = RFactorParams::new(n - 1, t + 1, r)?;
                let grown = RFactorParams::new(n, t, r)?;
                let e1_small = defgraph_core::extremal::ex1_factor_edges(&shrunk);
                let e2_small = defgraph_core::extremal::ex2_factor_edges(&shrunk);
                let e2_large = defgraph_core::extremal::ex2_factor_edges(&grown);
                let (ni, ri, ki) = (n as i64, r as i64, ((t + 1) / (r - 1)) as i64);

                // The headline implication.
                let growth_holds = e2_small + (ni - 1) <= e2_large;
                if e1_small < e2_small && !growth_holds {
                    fail(n, r, t, "growth-inequality");
                }
                // Exact difference of the two isolated-family counts.
                if e2_large - e2_small != (ni - 1) + ki + (ni - ki - ri) - ki * ri {
                    fail(n, r, t, "difference-identity");
                }
                // Growth holds exactly on t <= g.
                let t_rat = Rat::from_integer(t as i64);
                if growth_holds != (t_rat <= q.g) {
                    fail(n, r, t, "growth-iff-threshold");
                }
                // EX2 at most EX1 exactly on the window [f1, f2].
                let in_window = q.f1 <= t_rat && t_rat <= q.f2;
                if (e2_small <= e1_small) != in_window {
                    fail(n, r, t, "window-characterization");
                }
                // Divisibilities force one residue class mod r(r-1).
                let modulus = r * (r - 1);
                let family = ((r - 1) * (n - 1) + modulus - 1) % modulus;
                if t % modulus != family {
                    fail(n, r, t, "congruence-family");
                }
                // That residue plus t+1 < (r-1)(n-1) caps t at f2, so no
                // admissible t lies above the window.
                if t_rat > q.f2 {
                    fail(n, r, t, "no-admissible-t-above-f2");
                }
            }
        }
    }

    Ok(VerificationReport::new(
        "ex2-growth",
        param_map([("nmax", n_max.to_string()), ("rmax", r_max.to_string())]),
        checked,
        counterexamples,
        started.elapsed(),
    ))
}

// ================================================================
// Deficiency helpers shared by the CLI
// ================================================================

/// Compute a deficiency through the query type, mapping the property name.
pub fn deficiency_of(
    graph: Graph,
    property: deficiency::Property,
    t_cap: Option<usize>,
) -> Result<usize, Error> {
    let q = deficiency::DeficiencyQuery::new(graph, property, t_cap)?;
    deficiency::deficiency(&q)
}
