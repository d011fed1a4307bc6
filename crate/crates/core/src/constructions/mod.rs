//! Embedding constructions. Every builder returns an [`Embedding`] that has
//! already passed [`Embedding::verify`].
//!
//! Host numbering: guest vertices keep their indices `0..n`, added vertices
//! follow in the order listed in `added`.

mod auto;
mod diam2;
mod families;
mod general;

pub use auto::{embed_auto, embed_with, recognize};
pub use diam2::{embed_2sc_three, embed_diam2_four, embed_triple_isolated, embed_triple_p3};
pub use families::{embed_complete, embed_cycle, embed_path, embed_tree_caterpillar};
pub use general::{embed_connected, embed_general, embed_hat};

use crate::analysis::asc_verdict;
use crate::error::{Error, Result};
use crate::graph::{induced_check, Graph};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Hat,
    Connected,
    General,
    Complete,
    Diam2Four,
    #[serde(rename = "2sc_three")]
    TwoScThree,
    TripleIsolated,
    TripleP3,
    Path,
    Cycle,
    TreeCaterpillar,
    Exhaustive,
}

impl Method {
    pub const ALL: [Method; 12] = [
        Method::Hat,
        Method::Connected,
        Method::General,
        Method::Complete,
        Method::Diam2Four,
        Method::TwoScThree,
        Method::TripleIsolated,
        Method::TripleP3,
        Method::Path,
        Method::Cycle,
        Method::TreeCaterpillar,
        Method::Exhaustive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Hat => "hat",
            Method::Connected => "connected",
            Method::General => "general",
            Method::Complete => "complete",
            Method::Diam2Four => "diam2_four",
            Method::TwoScThree => "2sc_three",
            Method::TripleIsolated => "triple_isolated",
            Method::TripleP3 => "triple_p3",
            Method::Path => "path",
            Method::Cycle => "cycle",
            Method::TreeCaterpillar => "tree_caterpillar",
            Method::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                Error::Argument(format!(
                    "unknown method '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedVertex {
    pub role: String,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub method: Method,
    pub r: u32,
    pub guest: Graph,
    pub host: Graph,
    /// `map[g]` is the host vertex of guest vertex `g`.
    pub map: Vec<usize>,
    pub added: Vec<AddedVertex>,
}

impl Embedding {
    pub fn added_count(&self) -> usize {
        self.added.len()
    }

    /// Host vertex carrying `role`.
    pub fn role(&self, role: &str) -> Option<usize> {
        self.added.iter().find(|a| a.role == role).map(|a| a.vertex)
    }

    /// Checks order arithmetic, that the guest is induced under `map`, and
    /// that the host is r-ASC.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: String| {
            Err(Error::Internal(format!(
                "{} embedding: {what}",
                self.method
            )))
        };
        let n = self.guest.order();
        if self.map.len() != n {
            return fail(format!(
                "map has {} entries for {} guest vertices",
                self.map.len(),
                n
            ));
        }
        if self.host.order() != n + self.added.len() {
            return fail(format!(
                "host order {} != guest order {} + {} added",
                self.host.order(),
                n,
                self.added.len()
            ));
        }
        let mut seen = vec![false; self.host.order()];
        for v in self
            .map
            .iter()
            .copied()
            .chain(self.added.iter().map(|a| a.vertex))
        {
            if v >= seen.len() || seen[v] {
                return fail(format!("host vertex {v} is out of range or used twice"));
            }
            seen[v] = true;
        }
        if !induced_check(&self.host, &self.map, &self.guest)? {
            return fail("guest is not induced".into());
        }
        let verdict = match asc_verdict(&self.host) {
            Ok(v) => v,
            Err(e) => return fail(e.to_string()),
        };
        if !verdict.is_r_asc(self.r) {
            return fail(format!(
                "host is not {}-ASC (radius {}, non-central {:?})",
                self.r, verdict.radius, verdict.non_central
            ));
        }
        Ok(())
    }

    /// Same host and roles for a relabelled guest: `order[i]` is the guest
    /// vertex playing the role of vertex `i` of the embedded graph.
    pub(crate) fn relabel_guest(mut self, guest: &Graph, order: &[usize]) -> Result<Embedding> {
        let mut map = vec![0; order.len()];
        for (i, &g) in order.iter().enumerate() {
            map[g] = self.map[i];
        }
        self.map = map;
        self.guest = guest.clone();
        self.verify()?;
        Ok(self)
    }
}

/// Accumulates added vertices and edges over a guest placed at `0..n`.
pub(crate) struct Builder {
    guest: Graph,
    roles: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(crate) fn new(guest: &Graph) -> Self {
        Builder {
            guest: guest.clone(),
            roles: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub(crate) fn add(&mut self, role: impl Into<String>) -> usize {
        self.roles.push(role.into());
        self.guest.order() + self.roles.len() - 1
    }

    pub(crate) fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    pub(crate) fn path(&mut self, vertices: &[usize]) {
        for w in vertices.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    pub(crate) fn finish(self, method: Method, r: u32) -> Result<Embedding> {
        let n = self.guest.order();
        let mut host = self.guest.with_extra_vertices(self.roles.len());
        for (a, b) in self.edges {
            if a < n && b < n {
                return Err(Error::Internal(format!(
                    "{method} embedding adds guest edge {a} {b}"
                )));
            }
            if !host.has_edge(a, b) {
                host.add_edge(a, b);
            }
        }
        let e = Embedding {
            method,
            r,
            map: (0..n).collect(),
            added: self
                .roles
                .into_iter()
                .enumerate()
                .map(|(i, role)| AddedVertex {
                    role,
                    vertex: n + i,
                })
                .collect(),
            guest: self.guest,
            host,
        };
        e.verify()?;
        Ok(e)
    }
}

/// Role labels `prefix_1`, `prefix_2`, ...
pub(crate) fn indexed(prefix: &str, i: usize) -> String {
    format!("{prefix}_{i}")
}
