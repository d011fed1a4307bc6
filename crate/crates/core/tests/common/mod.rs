#![allow(dead_code)]

use asc_core::graph::{build_family, FamilySpec};
use asc_core::solver::graphs_by_order;
use asc_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn fam(spec: &str) -> Graph {
    build_family(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn shuffle(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute(&perm).unwrap()
}

pub fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|m| graphs_by_order(m).unwrap())
        .filter(|g| g.is_connected())
        .collect()
}

pub fn family_specs() -> Vec<&'static str> {
    vec![
        "path:1",
        "path:2",
        "path:4",
        "path:7",
        "path:10",
        "cycle:3",
        "cycle:5",
        "cycle:8",
        "cycle:11",
        "complete:2",
        "complete:4",
        "complete:6",
        "star:3",
        "star:5",
        "complete_bipartite:2,3",
        "complete_bipartite:3,4",
        "cocktail_party:2",
        "cocktail_party:3",
        "cocktail_party:4",
        "k1_join_matchings:2",
        "k1_join_matchings:3",
        "caterpillar:10,4",
        "caterpillar:12,6",
        "gadget_c_star:6",
        "gadget_c_star:8",
        "gadget_c_prime:7",
        "gadget_c8_double",
        "petersen",
    ]
}

/// All connected graphs up to order 5, every family above, and random
/// graphs of order 6..=12 (possibly disconnected) up to `size` graphs.
pub fn corpus(size: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = connected_up_to(5)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("connected#{i}"), g))
        .collect();
    out.extend(family_specs().into_iter().map(|s| (s.to_string(), fam(s))));
    let mut r = rng(seed);
    while out.len() < size {
        let n = r.gen_range(6..=12);
        let p = r.gen_range(0.15..0.7);
        let g = random_graph(&mut r, n, p);
        out.push((format!("random#{}", out.len()), g));
    }
    out
}
