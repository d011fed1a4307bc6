//! Hosts for complete graphs, paths, cycles and caterpillars, r = 3.
//!
//! Guests use the numbering of [`build_family`]; the paper's `v_i` is vertex `i - 1`.

use super::{embed_diam2_four, indexed, Builder, Embedding, Method};
use crate::error::{Error, Result};
use crate::graph::{build_family, FamilySpec, Graph};

/// C*_6 around guest `0` of a one-vertex guest.
fn c_star_6_around_vertex(g: &Graph, method: Method) -> Result<Embedding> {
    let mut b = Builder::new(g);
    let cycle: Vec<usize> = (1..6).map(|i| b.add(indexed("c", i))).collect();
    let p = b.add("p");
    b.edge(0, cycle[0]);
    b.path(&cycle);
    b.edge(cycle[4], 0);
    b.edge(p, 0);
    b.finish(method, 3)
}

/// K_1 gets C*_6 (6 added). For n ≥ 2, vertex 0 plays `v` and `1..n` the
/// clique K_{n-1}; added `a, b, d, g, u` with `a-b`, `b-v`, `b-d`, `d-g`,
/// `g-u` and `u` joined to the clique (5 added).
pub fn embed_complete(n: usize) -> Result<Embedding> {
    if n < 1 {
        return Err(Error::Domain("complete graph needs n >= 1".into()));
    }
    let guest = build_family(&FamilySpec::complete(n))?;
    if n == 1 {
        return c_star_6_around_vertex(&guest, Method::Complete);
    }
    let mut b = Builder::new(&guest);
    let a = b.add("a");
    let bb = b.add("b");
    let d = b.add("d");
    let gg = b.add("g");
    let u = b.add("u");
    b.path(&[a, bb, d, gg, u]);
    b.edge(bb, 0);
    for c in 1..n {
        b.edge(u, c);
    }
    b.finish(Method::Complete, 3)
}

/// Hosts realising θ_3(P_n): 7 − n for n ≤ 5, 1 for n ∈ {6, 7, 8}, 2 otherwise.
pub fn embed_path(n: usize) -> Result<Embedding> {
    if n < 1 {
        return Err(Error::Domain("path needs n >= 1".into()));
    }
    if n <= 2 {
        let mut e = embed_complete(n)?;
        e.method = Method::Path;
        return Ok(e);
    }
    let guest = build_family(&FamilySpec::path(n))?;
    let mut b = Builder::new(&guest);
    match n {
        3..=6 => {
            // C*_6 with the pendant at v_1 and the cycle c_0 = v_2, c_1 = v_3, ...
            let rest: Vec<usize> = (n - 1..6).map(|i| b.add(indexed("c", i))).collect();
            let mut closing = vec![n - 1];
            closing.extend(&rest);
            closing.push(1);
            b.path(&closing);
        }
        7 | 8 => {
            let x = b.add("x");
            for v in [0, 1, 2, 6].into_iter().chain((n == 8).then_some(7)) {
                b.edge(x, v);
            }
        }
        _ => {
            let x = b.add("x");
            let y = b.add("y");
            b.edge(x, y);
            for v in [0, 1, 6, 7, 8].into_iter().chain(9..n) {
                b.edge(x, v);
            }
            for v in [0, 3].into_iter().chain(9..n) {
                b.edge(y, v);
            }
        }
    }
    b.finish(Method::Path, 3)
}

/// Hosts realising θ_3(C_n): 8 − n for n ≤ 5, 1 for n ∈ {6, 7, 8}, 2 otherwise.
pub fn embed_cycle(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
    }
    let guest = build_family(&FamilySpec::cycle(n))?;
    let mut b = Builder::new(&guest);
    match n {
        3 => {
            let mut e = embed_complete(3)?;
            e.method = Method::Cycle;
            return Ok(e);
        }
        4 => {
            let mut e = embed_diam2_four(&guest)?;
            e.method = Method::Cycle;
            return Ok(e);
        }
        5 => {
            // H'_5: C'_5 with pendants at the two non-adjacent degree-2 cycle vertices.
            let t = b.add("t");
            let p2 = b.add("p_2");
            let p4 = b.add("p_4");
            b.edge(t, 0);
            b.edge(t, 1);
            b.edge(p2, 2);
            b.edge(p4, 4);
        }
        6 => {
            let p = b.add("p");
            b.edge(p, 0);
        }
        7 | 8 => {
            let t = b.add("t");
            let reach = if n == 7 { 2 } else { 5 };
            for v in 0..reach {
                b.edge(t, v);
            }
        }
        9 => {
            let x = b.add("x");
            let y = b.add("y");
            b.edge(x, y);
            for v in 2..=6 {
                b.edge(x, v);
            }
            b.edge(y, 5);
            b.edge(y, 8);
        }
        _ => {
            let x = b.add("x");
            let y = b.add("y");
            b.edge(x, y);
            for v in [0, 1, 6, 7, 8].into_iter().chain(9..n) {
                b.edge(x, v);
            }
            for v in [0, 3].into_iter().chain(9..n) {
                b.edge(y, v);
            }
        }
    }
    b.finish(Method::Cycle, 3)
}

/// Two added vertices `x`, `y` for the caterpillar of order n ≥ 10 with its
/// extra leaf at `v_k`.
pub fn embed_tree_caterpillar(n: usize, k: usize) -> Result<Embedding> {
    if n < 10 {
        return Err(Error::Domain(format!(
            "caterpillar construction needs n >= 10, got {n}"
        )));
    }
    let guest = build_family(&FamilySpec::caterpillar(n, k))?;
    let leaf = n - 1;
    let mut b = Builder::new(&guest);
    let x = b.add("x");
    let y = b.add("y");
    b.edge(x, y);
    for v in [0, 1].into_iter().chain(6..n - 1) {
        b.edge(x, v);
    }
    for v in [0, 3].into_iter().chain(9..n - 1) {
        b.edge(y, v);
    }
    if k != 6 {
        b.edge(y, leaf);
    }
    if k != 5 {
        b.edge(x, leaf);
    }
    b.finish(Method::TreeCaterpillar, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::asc_verdict;

    #[test]
    fn complete_graph_hosts() {
        let k2 = embed_complete(2).unwrap();
        assert_eq!(k2.host.order(), 7);
        let mut expected = vec![k2.role("a").unwrap(), k2.role("u").unwrap()];
        expected.sort();
        assert_eq!(asc_verdict(&k2.host).unwrap().non_central, expected);
        assert_eq!(embed_complete(1).unwrap().host.order(), 7);
        let k5 = embed_complete(5).unwrap();
        assert_eq!((k5.host.order(), k5.added_count()), (10, 5));
    }

    #[test]
    fn path_added_counts() {
        let expected = [6, 5, 4, 3, 2, 1, 1, 1, 2, 2, 2];
        for (i, &k) in expected.iter().enumerate() {
            assert_eq!(embed_path(i + 1).unwrap().added_count(), k, "P_{}", i + 1);
        }
        assert_eq!(embed_path(9).unwrap().host.order(), 11);
        assert_eq!(embed_path(25).unwrap().added_count(), 2);
    }

    #[test]
    fn cycle_added_counts() {
        for (n, k) in [
            (3, 5),
            (4, 4),
            (5, 3),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 2),
            (10, 2),
            (15, 2),
        ] {
            assert_eq!(embed_cycle(n).unwrap().added_count(), k, "C_{n}");
        }
    }

    #[test]
    fn caterpillar_hosts() {
        for (n, k) in [(10, 5), (12, 6), (14, 2)] {
            let e = embed_tree_caterpillar(n, k).unwrap();
            assert_eq!(e.added_count(), 2);
            assert_eq!(asc_verdict(&e.host).unwrap().non_central, vec![4, 8]);
        }
        let e = embed_tree_caterpillar(12, 6).unwrap();
        assert!(!e.host.has_edge(e.role("y").unwrap(), 11));
        assert!(embed_tree_caterpillar(9, 3).is_err());
        assert!(embed_tree_caterpillar(10, 9).is_err());
    }
}
