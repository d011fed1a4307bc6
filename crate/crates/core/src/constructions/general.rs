use super::{indexed, Builder, Embedding, Method};
use crate::error::{Error, Result};
use crate::graph::{distances_from, Graph};

/// Adds `w`, `x_1`, `y_1` adjacent to every guest vertex, the chains
/// `x_1..x_{r-1}` and `y_1..y_{r-1}`, and `w'` closing them.
pub fn embed_hat(g: &Graph, r: u32) -> Result<Embedding> {
    if r < 2 {
        return Err(Error::Domain(format!("r must be at least 2, got {r}")));
    }
    if g.order() == 0 {
        return Err(Error::Precondition(
            "guest must have at least one vertex".into(),
        ));
    }
    let mut b = Builder::new(g);
    let w = b.add("w");
    let x: Vec<usize> = (1..r as usize).map(|i| b.add(indexed("x", i))).collect();
    let y: Vec<usize> = (1..r as usize).map(|i| b.add(indexed("y", i))).collect();
    let w2 = b.add("w'");
    for v in 0..g.order() {
        b.edge(v, w);
        b.edge(v, x[0]);
        b.edge(v, y[0]);
    }
    b.path(&x);
    b.path(&y);
    b.edge(*x.last().unwrap(), w2);
    b.edge(*y.last().unwrap(), w2);
    b.finish(Method::Hat, r)
}

/// `x_1..x_{r-1}`, `y_1..y_{r-1}` and `w`, wired as the path
/// `x_1 - ... - x_{r-1} - y_{r-1} - ... - y_1 - w`.
struct Chain {
    x: Vec<usize>,
    y: Vec<usize>,
    w: usize,
}

impl Chain {
    /// `x_i` for 1-based `i`.
    fn xi(&self, i: usize) -> usize {
        self.x[i - 1]
    }

    fn yi(&self, i: usize) -> usize {
        self.y[i - 1]
    }

    fn add(b: &mut Builder, r: u32, with_spine: bool) -> Chain {
        let x: Vec<usize> = (1..r as usize).map(|i| b.add(indexed("x", i))).collect();
        let y: Vec<usize> = (1..r as usize).map(|i| b.add(indexed("y", i))).collect();
        let w = b.add("w");
        if with_spine {
            b.path(&x);
            b.edge(*x.last().unwrap(), *y.last().unwrap());
            b.path(&y);
            b.edge(y[0], w);
        }
        Chain { x, y, w }
    }
}

fn check_r3(r: u32) -> Result<()> {
    if r < 3 {
        return Err(Error::Domain(format!("r must be at least 3, got {r}")));
    }
    Ok(())
}

/// 2r−1 added vertices for a connected guest of order at least 2.
pub fn embed_connected(g: &Graph, r: u32) -> Result<Embedding> {
    check_r3(r)?;
    if g.order() < 2 || !g.is_connected() {
        return Err(Error::Precondition(
            "guest must be connected with at least two vertices".into(),
        ));
    }
    let mut b = Builder::new(g);
    if g.order() == 2 {
        // C_{2r} through guest 0, guest 1 pendant.
        let cycle: Vec<usize> = (1..2 * r as usize)
            .map(|i| b.add(indexed("c", i)))
            .collect();
        b.edge(0, cycle[0]);
        b.path(&cycle);
        b.edge(*cycle.last().unwrap(), 0);
        return b.finish(Method::Connected, r);
    }
    let chain = Chain::add(&mut b, r, true);
    let comp: Vec<usize> = (0..g.order()).collect();
    wire_component(&mut b, g, &comp, &chain);
    b.finish(Method::Connected, r)
}

/// Joins every vertex of a component (order ≥ 2) to `x_1` when its distance
/// from the component's smallest vertex is even and to `y_1` when it is odd.
///
/// Even vertices then sit at the cycle position of `x` and odd ones at that of
/// `y` in the 2r-cycle `x x_1 .. x_{r-1} y_{r-1} .. y_1 y`; every vertex has a
/// neighbour at both adjacent positions, so host distances are cycle distances.
fn wire_component(b: &mut Builder, g: &Graph, comp: &[usize], chain: &Chain) {
    let root = *comp.iter().min().expect("component is nonempty");
    let d = distances_from(g, root);
    for &v in comp {
        if d[v].is_multiple_of(2) {
            b.edge(v, chain.xi(1));
        } else {
            b.edge(v, chain.yi(1));
        }
    }
}

/// 2r−1 added vertices for any guest of order at least 2, by the number of
/// isolated vertices.
pub fn embed_general(g: &Graph, r: u32) -> Result<Embedding> {
    check_r3(r)?;
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition(
            "guest must have at least two vertices; use the hat construction for K_1".into(),
        ));
    }
    let isolated = g.isolated_vertices();
    let mut b = Builder::new(g);
    match isolated.len() {
        0 if g.is_connected() => {
            let mut e = embed_connected(g, r)?;
            e.method = Method::General;
            return Ok(e);
        }
        0 => {
            let chain = Chain::add(&mut b, r, true);
            for comp in g.components() {
                wire_component(&mut b, g, &comp, &chain);
            }
        }
        1 => {
            let v = isolated[0];
            let chain = Chain::add(&mut b, r, false);
            b.path(&chain.x);
            b.edge(*chain.x.last().unwrap(), v);
            b.edge(v, *chain.y.last().unwrap());
            b.path(&chain.y);
            for o in (0..n).filter(|&o| o != v) {
                b.edge(o, chain.xi(1));
                b.edge(o, chain.yi(1));
            }
            let u = (0..n).find(|&u| u != v).unwrap();
            b.edge(chain.w, u);
        }
        _ => {
            let (x0, y0) = (isolated[0], isolated[1]);
            let chain = Chain::add(&mut b, r, false);
            b.edge(x0, chain.xi(1));
            b.path(&chain.x);
            b.edge(*chain.x.last().unwrap(), y0);
            b.edge(y0, *chain.y.last().unwrap());
            b.path(&chain.y);
            b.edge(chain.yi(1), x0);
            b.edge(chain.w, x0);
            for o in (0..n).filter(|&o| o != x0 && o != y0) {
                b.edge(o, chain.xi(1));
                b.edge(o, chain.yi(1));
            }
        }
    }
    b.finish(Method::General, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::asc_verdict;
    use crate::graph::{build_family, FamilySpec};

    fn path(n: usize) -> Graph {
        build_family(&FamilySpec::path(n)).unwrap()
    }

    #[test]
    fn hat_examples() {
        let e = embed_hat(&Graph::empty(1), 2).unwrap();
        assert_eq!(e.host.order(), 5);
        let v = asc_verdict(&e.host).unwrap();
        assert_eq!(
            v.non_central,
            vec![e.role("w").unwrap(), e.role("w'").unwrap()]
        );
        assert_eq!(embed_hat(&path(3), 3).unwrap().host.order(), 9);
        let c5 = build_family(&FamilySpec::cycle(5)).unwrap();
        assert_eq!(embed_hat(&c5, 4).unwrap().host.order(), 13);
        assert!(matches!(embed_hat(&path(2), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn hat_accepts_edgeless_guests() {
        for r in 2..=5 {
            assert_eq!(
                embed_hat(&Graph::empty(4), r).unwrap().added_count(),
                2 * r as usize
            );
        }
    }

    #[test]
    fn connected_examples() {
        let k2 = embed_connected(&path(2), 3).unwrap();
        assert_eq!(k2.host.order(), 7);
        assert_eq!(k2.host.degree(1), 1);
        assert_eq!(embed_connected(&path(3), 3).unwrap().host.order(), 8);
        let c5 = build_family(&FamilySpec::cycle(5)).unwrap();
        let e = embed_connected(&c5, 4).unwrap();
        assert_eq!(e.host.order(), 12);
        let nc = asc_verdict(&e.host).unwrap().non_central;
        let mut expected = vec![e.role("w").unwrap(), e.role("x_2").unwrap()];
        expected.sort();
        assert_eq!(nc, expected);
        assert!(matches!(
            embed_connected(&Graph::empty(2), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn connected_guests_of_large_diameter() {
        let guests = [
            build_family(&FamilySpec::cycle(8)).unwrap(),
            build_family(&FamilySpec::cycle(11)).unwrap(),
            path(7),
            path(12),
            build_family(&FamilySpec::caterpillar(12, 6)).unwrap(),
        ];
        for g in &guests {
            for r in 3..=6 {
                let e = embed_connected(g, r).unwrap();
                assert_eq!(e.added_count(), 2 * r as usize - 1);
            }
        }
    }

    #[test]
    fn general_cases() {
        assert_eq!(embed_general(&Graph::empty(2), 3).unwrap().host.order(), 7);
        let k1k2 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(embed_general(&k1k2, 3).unwrap().host.order(), 8);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(embed_general(&two_k2, 3).unwrap().host.order(), 9);
        let c8_p3 = build_family(&FamilySpec::cycle(8))
            .unwrap()
            .disjoint_union(&path(3));
        for r in 3..=5 {
            assert_eq!(
                embed_general(&c8_p3, r).unwrap().added_count(),
                2 * r as usize - 1
            );
        }
        assert!(embed_general(&Graph::empty(1), 3).is_err());
    }
}
