//! Randomized structural invariants. Strategies draw a vertex count and a
//! raw edge bitmap, so every labelled graph in range is reachable; proptest
//! shrinks toward the empty graph on failure.

use defgraph_core::certificate::{FactorCertificate, TileKind};
use defgraph_core::deficiency::{deficiency_monotone_step, DeficiencyQuery, Property};
use defgraph_core::extremal::{ex1_factor, ex2_factor, kr_bound, BoundSide, RFactorParams};
use defgraph_core::factor::kr_factor;
use defgraph_core::{choose2, emit_graph6, parse_graph6, validate_certificate, Graph, Rat};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |edges| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if edges[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Valid clique-factor parameter triples: r >= 3, n >= 2, r | (n+t),
/// t < (r-1)n.
fn arb_params() -> impl Strategy<Value = RFactorParams> {
    (3usize..=6, 2usize..=16).prop_flat_map(|(r, n)| {
        let first = (r - n % r) % r;
        let count = ((r - 1) * n - first).div_ceil(r).max(1);
        (0..count).prop_map(move |i| RFactorParams::new(n, first + i * r, r).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn graph6_round_trips(g in arb_graph(24)) {
        let back = parse_graph6(&emit_graph6(&g)).unwrap();
        prop_assert!(back.same_adjacency(&g));
    }

    #[test]
    fn join_edge_count_and_associativity(g in arb_graph(10), a in 0usize..4, b in 0usize..4) {
        let n = g.n() as i64;
        let joined = g.join(a);
        prop_assert_eq!(
            joined.edge_count() as i64,
            g.edge_count() as i64 + (a as i64) * n + choose2(a as i64)
        );
        prop_assert_eq!(joined.clique_mark().count(), a);
        // Joining twice matches one bigger join on adjacency.
        prop_assert!(joined.join(b).same_adjacency(&g.join(a + b)));
    }

    #[test]
    fn complement_involutes(g in arb_graph(16)) {
        let n = g.n() as i64;
        let co = g.complement();
        prop_assert!(co.complement().same_adjacency(&g));
        prop_assert_eq!(g.edge_count() as i64 + co.edge_count() as i64, choose2(n));
    }

    #[test]
    fn clique_bound_is_the_larger_family(p in arb_params()) {
        let bound = kr_bound(&p);
        let e1 = ex1_factor(&p).edge_count() as i64;
        let e2 = ex2_factor(&p).unwrap().edge_count() as i64;
        prop_assert_eq!(bound.value, Rat::from_integer(e1.max(e2)));
        match bound.side {
            BoundSide::Ex1 => prop_assert!(e1 >= e2),
            BoundSide::Ex2 => prop_assert!(e2 > e1),
        }
    }

    #[test]
    fn extremal_joins_have_no_factor(p in arb_params()) {
        // Sharpness at random parameters, kept tiny so the solver is fast.
        prop_assume!(p.n() + p.t() <= 12);
        let j1 = ex1_factor(&p).join(p.t());
        prop_assert!(kr_factor(&j1, p.r()).is_none());
        let j2 = ex2_factor(&p).unwrap().join(p.t());
        prop_assert!(kr_factor(&j2, p.r()).is_none());
    }

    #[test]
    fn tampered_certificates_are_rejected(g in arb_graph(9), t in 0usize..3) {
        let joined = g.join(t);
        if joined.n() % 3 != 0 {
            return Ok(());
        }
        if let Some(cert) = kr_factor(&joined, 3) {
            validate_certificate(&joined, &cert).unwrap();
            if cert.tiles.len() >= 2 {
                // Double-cover one vertex: must be caught.
                let mut bad = cert.clone();
                bad.tiles[0][0] = bad.tiles[1][0];
                prop_assert!(validate_certificate(&joined, &bad).is_err());
            }
            // Wrong tile size: must be caught (vacuous for empty graphs).
            if !cert.tiles.is_empty() {
                let bad = FactorCertificate { kind: TileKind::Clique(4), tiles: cert.tiles.clone() };
                prop_assert!(validate_certificate(&joined, &bad).is_err());
            }
        }
    }

    #[test]
    fn clique_property_is_monotone_along_the_residue_class(g in arb_graph(6)) {
        let n = g.n();
        let q = DeficiencyQuery::new(g, Property::KrFactor(3), Some(3 * n + 9)).unwrap();
        let start = (3 - n % 3) % 3;
        let mut held = false;
        for t in (start..=2 * n + 3).step_by(3) {
            let now = deficiency_monotone_step(&q, t).unwrap();
            prop_assert!(!held || now, "property lost between t = {} and t = {t}", t - 3);
            held = now;
        }
    }
}
