use super::{host_is_r_asc, min_asc_order};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, parse_graph6, Graph};
use crate::par;
use std::collections::BTreeSet;

/// Largest order for which [`graphs_by_order`] builds a deduplicated list.
pub const MAX_ENUMERATED_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallestReport {
    pub r: u32,
    /// Smallest order with an r-ASC graph, if one was found up to `max_n`.
    pub order: Option<usize>,
    pub witness: Option<Graph>,
    /// Orders searched without a witness, with the number of graphs tested.
    pub exhausted: Vec<(usize, u64)>,
    pub max_n: usize,
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// sorted by canonical graph6 code.
pub fn graphs_by_order(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::Argument(format!(
            "graph enumeration is limited to order {MAX_ENUMERATED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 0..n {
        level = next_level(&level);
    }
    Ok(level)
}

fn next_level(level: &[Graph]) -> Vec<Graph> {
    let codes = par::map_slice_with(true, level, |g| {
        let m = g.order();
        (0u64..1 << m)
            .map(|s| canonical_code(&extend(g, s)))
            .collect::<Vec<_>>()
    });
    let set: BTreeSet<String> = codes.into_iter().flatten().collect();
    set.iter()
        .map(|c| parse_graph6(c).expect("canonical codes are valid graph6"))
        .collect()
}

/// `g` plus one vertex adjacent to the vertices in `s`.
fn extend(g: &Graph, s: u64) -> Graph {
    let m = g.order();
    let mut h = g.with_extra_vertices(1);
    for v in (0..m).filter(|&v| s >> v & 1 == 1) {
        h.add_edge(v, m);
    }
    h
}

/// First r-ASC graph among one-vertex extensions of all graphs of order n − 1.
fn search_order(prev: &[Graph], r: u32) -> (Option<Graph>, u64) {
    let tested: u64 = prev.iter().map(|g| (1u64 << g.order()) - 1).sum();
    let hit = par::find_map_first(true, prev, |g| {
        let m = g.order();
        let base: Vec<u64> = (0..m)
            .map(|v| if m == 0 { 0 } else { g.row(v)[0] })
            .collect();
        let mut rows = vec![0u64; m + 1];
        (1u64..1 << m).find_map(|s| {
            for v in 0..m {
                rows[v] = base[v] | (s >> v & 1) << m;
            }
            rows[m] = s;
            host_is_r_asc(&rows, r, true).then(|| extend(g, s))
        })
    });
    (hit, tested)
}

/// Smallest order of an r-ASC graph, searching orders from
/// [`min_asc_order`] up to `max_n`. With `verify_below`, every smaller order
/// is searched too.
pub fn smallest_asc_order(r: u32, max_n: usize, verify_below: bool) -> Result<SmallestReport> {
    if r < 2 {
        return Err(Error::Domain(format!("radius must be at least 2, got {r}")));
    }
    if max_n > MAX_ENUMERATED_ORDER + 1 {
        return Err(Error::Argument(format!(
            "orders above {} are not enumerated, got max_n = {max_n}",
            MAX_ENUMERATED_ORDER + 1
        )));
    }
    let first = if verify_below { 2 } else { min_asc_order(r) };
    let mut report = SmallestReport {
        r,
        order: None,
        witness: None,
        exhausted: Vec::new(),
        max_n,
    };
    let mut level = vec![Graph::empty(0)];
    for n in 1..=max_n {
        if n >= first {
            let (hit, tested) = search_order(&level, r);
            if let Some(g) = hit {
                report.order = Some(n);
                report.witness = Some(g);
                return Ok(report);
            }
            report.exhausted.push((n, tested));
        }
        if n < max_n {
            level = next_level(&level);
        }
    }
    Ok(report)
}
