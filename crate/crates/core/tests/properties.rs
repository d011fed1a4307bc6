mod common;

use asc_core::analysis::asc_verdict;
use asc_core::constructions::{embed_general, embed_hat};
use asc_core::graph::{ecc_profile, parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use asc_core::solver::{
    exact_index, exists_extension, naive_reference, Budget, Prune, SearchConfig,
};
use asc_core::Graph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn prune_strategy() -> impl Strategy<Value = Prune> {
    (any::<bool>(), any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(a, b, c, d)| Prune {
        symmetry: a,
        connectivity: b,
        early_ecc: c,
        order_bound: d,
    })
}

fn unlimited(prune: Prune, parallel: bool) -> SearchConfig {
    SearchConfig {
        budget: Budget::UNLIMITED,
        prune,
        parallel,
    }
}

/// Eccentricities by Floyd-Warshall; `None` when disconnected.
fn floyd_ecc(g: &Graph) -> Option<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let ecc: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
    ecc.iter().all(|&e| e < inf).then_some(ecc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pruned_search_matches_naive(g in graph_strategy(5), k in 1usize..=3, r in 2u32..=3, prune in prune_strategy()) {
        let n = g.order();
        prop_assume!(k * n + k * (k - 1) / 2 <= 14);
        let pruned = exists_extension(&g, r, k, &unlimited(prune, true)).unwrap();
        let naive = naive_reference(&g, r, k).unwrap();
        prop_assert_eq!(pruned.outcome.name(), naive.outcome.name());
        if let Some(w) = pruned.outcome.witness() {
            prop_assert!(w.verify().is_ok());
            prop_assert_eq!(w.added_count(), k);
        }
    }

    #[test]
    fn sequential_and_parallel_search_agree(g in graph_strategy(6), k in 1usize..=3) {
        let a = exists_extension(&g, 3, k, &unlimited(Prune::ALL, true)).unwrap();
        let b = exists_extension(&g, 3, k, &unlimited(Prune::ALL, false)).unwrap();
        prop_assert_eq!(a.outcome, b.outcome);
        prop_assert_eq!(a.candidates, b.candidates);
    }

    #[test]
    fn index_is_label_invariant(g in graph_strategy(5), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let h = common::shuffle(&mut rng, &g);
        let cfg = unlimited(Prune::ALL, true);
        let a = exact_index(&g, 3, 6, &cfg).unwrap();
        let b = exact_index(&h, 3, 6, &cfg).unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert!(a.verify().is_ok() && b.verify().is_ok());
    }

    #[test]
    fn eccentricities_match_floyd_warshall(g in graph_strategy(12)) {
        match (ecc_profile(&g), floyd_ecc(&g)) {
            (Ok(p), Some(ecc)) => prop_assert_eq!(p.ecc, ecc),
            (Err(_), None) => {}
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a.is_ok(), b.is_some()),
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(&parse_graph6(&write_graph6(&g).unwrap()).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn constructions_verify_on_random_guests(g in graph_strategy(10), r in 2u32..=5) {
        prop_assert_eq!(embed_hat(&g, r).unwrap().added_count(), 2 * r as usize);
        if r >= 3 && g.order() >= 2 {
            prop_assert_eq!(embed_general(&g, r).unwrap().added_count(), 2 * r as usize - 1);
        }
    }

    #[test]
    fn index_is_dominated_by_constructions(g in graph_strategy(4)) {
        let cert = exact_index(&g, 3, 6, &unlimited(Prune::ALL, true)).unwrap();
        let value = cert.status.value();
        prop_assert!(value <= embed_hat(&g, 3).unwrap().added_count());
        if g.order() >= 2 {
            prop_assert!(value <= embed_general(&g, 3).unwrap().added_count());
        }
        let is_asc = asc_verdict(&g).map(|v| v.is_r_asc(3)).unwrap_or(false);
        prop_assert_eq!(value == 0, is_asc);
    }
}
