//! Undirected simple graphs on positional vertices `0..order`.
//!
//! Adjacency is stored as one bit-packed row per vertex, so neighbourhood
//! intersections and BFS frontier expansion work a machine word at a time.

mod canon;
mod distance;
mod edgelist;
mod families;
mod graph6;

pub use canon::{canonical_code, canonical_form};
pub use distance::{
    distance_matrix, distances_from, ecc_profile, ecc_profile_with, DistanceMatrix, EccProfile,
    UNREACHABLE,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use families::{build_family, FamilyKind, FamilySpec};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_ORDER};

use crate::error::{Error, Result};
use std::fmt;

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterates the indices of set bits in a packed bit row.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// A finite, undirected, simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let stride = words_for(order);
        Graph {
            order,
            stride,
            rows: vec![0; stride * order],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
            // try_add_edge tolerates repeats; an edge list must not contain them.
        }
        if g.edge_count() != edges.len() {
            return Err(Error::Argument("edge list contains a repeated pair".into()));
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// Packed neighbourhood of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order
            && v < self.order
            && self.rows[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `uv`. Re-inserting an existing edge is a no-op.
    ///
    /// Panics on a loop or an out-of-range endpoint; use [`Graph::try_add_edge`] for untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::Argument(format!(
                "edge ({u},{v}) out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::Argument(format!("self-loop at vertex {u}")));
        }
        self.rows[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.stride + u / WORD] |= 1 << (u % WORD);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order && v < self.order {
            self.rows[u * self.stride + v / WORD] &= !(1 << (v % WORD));
            self.rows[v * self.stride + u / WORD] &= !(1 << (u % WORD));
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&v| self.row(v).iter().all(|&w| w == 0))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.components().len() == 1
    }

    /// `G[X]`, with `vertices[i]` becoming vertex `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        check_injective(perm, self.order, self.order)?;
        if perm.len() != self.order {
            return Err(Error::Argument(
                "permutation length differs from order".into(),
            ));
        }
        let mut h = Graph::empty(self.order);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        Ok(h)
    }

    /// Common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let words: Vec<u64> = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        iter_bits(&words).collect()
    }

    /// Joins `self` with `other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut h = self.disjoint_union(other);
        for u in 0..self.order {
            for v in 0..other.order {
                h.add_edge(u, self.order + v);
            }
        }
        h
    }

    /// `self ∪ other`, with `self`'s vertices first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut h = Graph::empty(self.order + other.order);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.add_edge(self.order + u, self.order + v);
        }
        h
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Extends the vertex set by `extra` isolated vertices, keeping existing labels.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        let mut h = Graph::empty(self.order + extra);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        h
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Binary graph combinators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Join,
    DisjointUnion,
    Complement,
}

/// Applies a combinator; `second` must be present exactly when the operation is binary.
pub fn combine(op: CombineOp, first: &Graph, second: Option<&Graph>) -> Result<Graph> {
    match (op, second) {
        (CombineOp::Join, Some(h)) => Ok(first.join(h)),
        (CombineOp::DisjointUnion, Some(h)) => Ok(first.disjoint_union(h)),
        (CombineOp::Complement, None) => Ok(first.complement()),
        (CombineOp::Complement, Some(_)) => {
            Err(Error::Argument("complement takes one graph".into()))
        }
        (_, None) => Err(Error::Argument(format!("{op:?} takes two graphs"))),
    }
}

pub(crate) fn check_injective(map: &[usize], domain: usize, range: usize) -> Result<()> {
    if map.len() != domain {
        return Err(Error::Argument(format!(
            "map has {} entries, guest has {domain} vertices",
            map.len()
        )));
    }
    let mut seen = vec![false; range];
    for (a, &m) in map.iter().enumerate() {
        if m >= range {
            return Err(Error::Argument(format!(
                "vertex {a} maps to {m}, outside 0..{range}"
            )));
        }
        if std::mem::replace(&mut seen[m], true) {
            return Err(Error::Argument(format!(
                "map is not injective at host vertex {m}"
            )));
        }
    }
    Ok(())
}

/// Whether `map` embeds `guest` into `host` as an induced subgraph.
pub fn induced_check(host: &Graph, map: &[usize], guest: &Graph) -> Result<bool> {
    check_injective(map, guest.order(), host.order())?;
    for a in 0..guest.order() {
        for b in a + 1..guest.order() {
            if guest.has_edge(a, b) != host.has_edge(map[a], map[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
