use super::Method;
use super::{
    embed_2sc_three, embed_complete, embed_connected, embed_cycle, embed_diam2_four, embed_general,
    embed_hat, embed_path, embed_tree_caterpillar, embed_triple_isolated, embed_triple_p3,
    Embedding,
};
use crate::error::{Error, Result};
use crate::graph::{distances_from, ecc_profile, FamilyKind, FamilySpec, Graph};

/// Identifies paths, cycles, complete graphs and caterpillars of diameter n − 2.
///
/// Returns the family and `order`, where `order[i]` is the vertex of `g`
/// playing vertex `i` of `build_family(spec)`.
pub fn recognize(g: &Graph) -> Option<(FamilySpec, Vec<usize>)> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let m = g.edge_count();
    if m == n * (n - 1) / 2 {
        return Some((FamilySpec::complete(n), (0..n).collect()));
    }
    if g.max_degree() <= 2 && (m == n - 1 || m == n) {
        let start = if m == n {
            0
        } else {
            (0..n).find(|&v| g.degree(v) <= 1)?
        };
        let order = walk(g, start);
        let spec = if m == n {
            FamilySpec::cycle(n)
        } else {
            FamilySpec::path(n)
        };
        return Some((spec, order));
    }
    if m == n - 1 && n >= 4 {
        let d0 = distances_from(g, 0);
        let a = (0..n).max_by_key(|&v| (d0[v], std::cmp::Reverse(v)))?;
        let da = distances_from(g, a);
        let b = (0..n).max_by_key(|&v| (da[v], std::cmp::Reverse(v)))?;
        if da[b] as usize != n - 2 {
            return None;
        }
        let db = distances_from(g, b);
        let mut spine: Vec<usize> = (0..n).filter(|&v| da[v] + db[v] == da[b]).collect();
        spine.sort_by_key(|&v| da[v]);
        let leaf = (0..n).find(|v| !spine.contains(v))?;
        let at = spine.iter().position(|&s| g.has_edge(s, leaf))?;
        spine.push(leaf);
        return Some((FamilySpec::caterpillar(n, at + 1), spine));
    }
    None
}

fn walk(g: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g
        .neighbors(cur)
        .find(|&v| v != prev && v != start && !order.contains(&v))
    {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Drops inapplicable constructions; verification failures still propagate.
fn applicable(res: Result<Embedding>) -> Result<Option<Embedding>> {
    match res {
        Ok(e) => Ok(Some(e)),
        Err(Error::Internal(msg)) => Err(Error::Internal(msg)),
        Err(_) => Ok(None),
    }
}

fn family_embedding(spec: &FamilySpec, r: u32) -> Result<Option<Embedding>> {
    if r != 3 {
        return Ok(None);
    }
    let p = &spec.params;
    applicable(match spec.kind {
        FamilyKind::Complete => embed_complete(p[0]),
        FamilyKind::Path => embed_path(p[0]),
        FamilyKind::Cycle => embed_cycle(p[0]),
        FamilyKind::Caterpillar if p[0] >= 10 => embed_tree_caterpillar(p[0], p[1]),
        _ => return Ok(None),
    })
}

/// Runs one named construction on `g`. Family constructions require `g` to
/// be recognised as that family and r = 3; the result keeps `g`'s labels.
pub fn embed_with(method: Method, g: &Graph, r: u32) -> Result<Embedding> {
    let three = || -> Result<()> {
        if r != 3 {
            return Err(Error::Domain(format!(
                "{method} builds 3-ASC hosts, got r = {r}"
            )));
        }
        Ok(())
    };
    let family = |kind: FamilyKind| -> Result<Embedding> {
        three()?;
        let (spec, order) = recognize(g)
            .filter(|(s, _)| s.kind == kind)
            .ok_or_else(|| Error::Precondition(format!("guest is not a {} graph", kind.name())))?;
        let e = match kind {
            FamilyKind::Complete => embed_complete(spec.params[0]),
            FamilyKind::Path => embed_path(spec.params[0]),
            FamilyKind::Cycle => embed_cycle(spec.params[0]),
            _ => embed_tree_caterpillar(spec.params[0], spec.params[1]),
        }?;
        e.relabel_guest(g, &order)
    };
    match method {
        Method::Hat => embed_hat(g, r),
        Method::Connected => embed_connected(g, r),
        Method::General => embed_general(g, r),
        Method::Complete => family(FamilyKind::Complete),
        Method::Path => family(FamilyKind::Path),
        Method::Cycle => family(FamilyKind::Cycle),
        Method::TreeCaterpillar => family(FamilyKind::Caterpillar),
        Method::Diam2Four => three().and_then(|_| embed_diam2_four(g)),
        Method::TwoScThree => three().and_then(|_| embed_2sc_three(g)),
        Method::TripleIsolated => three().and_then(|_| embed_triple_isolated(g)),
        Method::TripleP3 => three().and_then(|_| embed_triple_p3(g)),
        Method::Exhaustive => Err(Error::Argument(
            "exhaustive witnesses come from the index solver".into(),
        )),
    }
}

/// The applicable construction with the fewest added vertices; ties go to
/// the earlier candidate in the order: family hosts, three-vertex diameter-2
/// extensions, the four-vertex extension, the 2r − 1 constructions, then
/// the 2r construction.
pub fn embed_auto(g: &Graph, r: u32) -> Result<Embedding> {
    let mut candidates: Vec<Embedding> = Vec::new();
    if let Some((spec, order)) = recognize(g) {
        if let Some(e) = family_embedding(&spec, r)? {
            candidates.push(e.relabel_guest(g, &order)?);
        }
    }
    let diam2 = g.order() >= 2 && ecc_profile(g).map(|p| p.diameter == 2).unwrap_or(false);
    if r == 3 && diam2 {
        candidates.extend(applicable(embed_2sc_three(g))?);
        candidates.extend(applicable(embed_triple_isolated(g))?);
        candidates.extend(applicable(embed_triple_p3(g))?);
        candidates.extend(applicable(embed_diam2_four(g))?);
    }
    if r >= 3 && g.order() >= 2 {
        if g.is_connected() {
            candidates.extend(applicable(embed_connected(g, r))?);
        } else {
            candidates.extend(applicable(embed_general(g, r))?);
        }
    }
    let hat = embed_hat(g, r)?;
    candidates.push(hat);
    let best = candidates.iter().map(|e| e.added_count()).min().unwrap();
    Ok(candidates
        .into_iter()
        .find(|e| e.added_count() == best)
        .unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn auto_picks_the_family_host() {
        let e = embed_auto(&build_family(&FamilySpec::path(9)).unwrap(), 3).unwrap();
        assert_eq!((e.method, e.added_count()), (Method::Path, 2));
        assert_eq!(embed_auto(&Graph::empty(1), 3).unwrap().added_count(), 6);
        let pg = embed_auto(&build_family(&FamilySpec::petersen()).unwrap(), 3).unwrap();
        assert_eq!(pg.added_count(), 3);
    }

    #[test]
    fn auto_respects_the_general_bound_on_disconnected_guests() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert!(embed_auto(&g, 4).unwrap().added_count() <= 7);
    }

    #[test]
    fn named_methods() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = build_family(&FamilySpec::path(10)).unwrap();
        let mut perm: Vec<usize> = (0..10).collect();
        perm.shuffle(&mut rng);
        let h = g.permute(&perm).unwrap();
        let e = embed_with(Method::Path, &h, 3).unwrap();
        assert_eq!((e.added_count(), &e.guest), (2, &h));
        assert!(matches!(
            embed_with(Method::Cycle, &h, 3),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            embed_with(Method::Path, &h, 4),
            Err(Error::Domain(_))
        ));
        assert_eq!(embed_with(Method::Hat, &h, 4).unwrap().added_count(), 8);
        assert!(embed_with(Method::Exhaustive, &h, 3).is_err());
    }

    #[test]
    fn recognizes_relabelled_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let specs = [
            FamilySpec::path(7),
            FamilySpec::cycle(9),
            FamilySpec::complete(4),
            FamilySpec::caterpillar(11, 4),
        ];
        for spec in specs {
            let g = build_family(&spec).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm).unwrap();
            let (found, order) = recognize(&h).unwrap();
            assert_eq!(found.kind, spec.kind);
            assert_eq!(found.params[0], spec.params[0]);
            let e = embed_auto(&h, 3).unwrap();
            assert_eq!(e.guest, h);
            assert_eq!(order.len(), h.order());
        }
        assert!(recognize(&build_family(&FamilySpec::star(4)).unwrap()).is_none());
    }
}
