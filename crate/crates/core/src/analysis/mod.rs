//! ASC verification, eccentric sets, diametrical structure and the
//! sufficient-condition checkers for diameter-2 graphs.

mod conditions;

pub use conditions::{
    check_isolated_vertex, check_new_added, check_no_triple, check_p3, check_union_of_complete,
    classify_diam2, ConditionWitness, Diam2Classification, Diam2Verdict, TheoremTag,
};

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, distances_from, ecc_profile, EccProfile, Graph, UNREACHABLE};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AscVerdict {
    pub is_asc: bool,
    /// Radius when the graph is ASC.
    pub r: Option<u32>,
    pub radius: u32,
    pub non_central: Vec<usize>,
    pub ecc_of_non_central: Vec<u32>,
}

impl AscVerdict {
    pub fn from_profile(p: &EccProfile) -> Self {
        let non_central: Vec<usize> = (0..p.ecc.len()).filter(|&v| p.ecc[v] != p.radius).collect();
        let ecc_of_non_central = non_central.iter().map(|&v| p.ecc[v]).collect();
        let is_asc = non_central.len() == 2;
        AscVerdict {
            is_asc,
            r: is_asc.then_some(p.radius),
            radius: p.radius,
            non_central,
            ecc_of_non_central,
        }
    }

    pub fn is_r_asc(&self, r: u32) -> bool {
        self.r == Some(r)
    }
}

pub fn asc_verdict(g: &Graph) -> Result<AscVerdict> {
    Ok(AscVerdict::from_profile(&ecc_profile(g)?))
}

fn connected_distances(g: &Graph, u: usize) -> Result<Vec<u32>> {
    if u >= g.order() {
        return Err(Error::Argument(format!(
            "vertex {u} out of range for order {}",
            g.order()
        )));
    }
    let d = distances_from(g, u);
    if d.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

/// Vertices at distance ecc(u) from `u`.
pub fn ecc_set(g: &Graph, u: usize) -> Result<Vec<usize>> {
    let d = connected_distances(g, u)?;
    let e = d.iter().copied().max().unwrap_or(0);
    Ok((0..d.len()).filter(|&v| d[v] == e && v != u).collect())
}

/// Vertices at distance exactly 2 from `u`.
pub fn n2_set(g: &Graph, u: usize) -> Result<Vec<usize>> {
    let d = connected_distances(g, u)?;
    Ok((0..d.len()).filter(|&v| d[v] == 2).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametricalStructure {
    pub diameter: u32,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

pub fn diametrical_structure(g: &Graph) -> Result<DiametricalStructure> {
    let prof = ecc_profile(g)?;
    let d = distance_matrix(g);
    let diam = prof.diameter;
    let n = g.order();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if d.get(a, b) != diam {
                continue;
            }
            pairs.push((a, b));
            for c in b + 1..n {
                if d.get(a, c) == diam && d.get(b, c) == diam {
                    triples.push((a, b, c));
                }
            }
        }
    }
    Ok(DiametricalStructure {
        diameter: diam,
        pairs,
        triples,
    })
}
