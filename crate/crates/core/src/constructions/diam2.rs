//! Three- and four-vertex extensions of diameter-2 graphs for r = 3.

use super::{Builder, Embedding, Method};
use crate::analysis::{
    check_isolated_vertex, check_new_added, check_p3, ecc_set, ConditionWitness,
};
use crate::error::{Error, Result};
use crate::graph::{ecc_profile, Graph};

fn require_diam2(g: &Graph) -> Result<Vec<u32>> {
    let prof = ecc_profile(g)?;
    if prof.diameter != 2 {
        return Err(Error::Precondition(format!(
            "diameter must be 2, found {}",
            prof.diameter
        )));
    }
    Ok(prof.ecc)
}

fn require(w: ConditionWitness) -> Result<Vec<usize>> {
    if !w.holds {
        let report = serde_json::to_string(&w).unwrap_or_default();
        return Err(Error::Precondition(format!(
            "condition {} does not hold: {report}",
            w.theorem.name()
        )));
    }
    Ok(w.vertices)
}

fn common_ecc(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    let eu = ecc_set(g, u)?;
    Ok(ecc_set(g, v)?
        .into_iter()
        .filter(|t| eu.contains(t))
        .collect())
}

/// Path `w - z - y - x` with `u x` and `w` joined to everything but `u`, `v`.
pub fn embed_diam2_four(g: &Graph) -> Result<Embedding> {
    let ecc = require_diam2(g)?;
    let v = ecc.iter().position(|&e| e == 2).unwrap();
    let u = ecc_set(g, v)?[0];
    let mut b = Builder::new(g);
    let w = b.add("w");
    let z = b.add("z");
    let y = b.add("y");
    let x = b.add("x");
    b.path(&[w, z, y, x]);
    b.edge(u, x);
    for t in (0..g.order()).filter(|&t| t != u && t != v) {
        b.edge(t, w);
    }
    b.finish(Method::Diam2Four, 3)
}

/// Pendants `x` at `u` and `y` at `v`, and `z` joined to `u'` and `v'`.
pub fn embed_2sc_three(g: &Graph) -> Result<Embedding> {
    let wit = require(check_new_added(g)?)?;
    let (u, v, u1, v1) = (wit[0], wit[1], wit[2], wit[3]);
    let mut b = Builder::new(g);
    let x = b.add("x");
    let y = b.add("y");
    let z = b.add("z");
    b.edge(x, u);
    b.edge(y, v);
    b.edge(z, u1);
    b.edge(z, v1);
    b.finish(Method::TwoScThree, 3)
}

pub fn embed_triple_isolated(g: &Graph) -> Result<Embedding> {
    require_diam2(g)?;
    let wit = require(check_isolated_vertex(g)?)?;
    let (u, v, w) = (wit[0], wit[1], wit[2]);
    let mut b = Builder::new(g);
    let x = b.add("x");
    let y = b.add("y");
    let z = b.add("z");
    b.edge(u, x);
    b.edge(v, z);
    b.path(&[x, y, z]);
    for t in common_ecc(g, u, v)? {
        if t != w {
            b.edge(x, t);
        }
    }
    b.finish(Method::TripleIsolated, 3)
}

pub fn embed_triple_p3(g: &Graph) -> Result<Embedding> {
    require_diam2(g)?;
    let wit = require(check_p3(g)?)?;
    let (u, v, w1, w3) = (wit[0], wit[1], wit[2], wit[4]);
    let mut b = Builder::new(g);
    let x = b.add("x");
    let y = b.add("y");
    let z = b.add("z");
    b.path(&[x, y, z]);
    b.edge(u, x);
    b.edge(v, z);
    b.edge(w3, x);
    for t in common_ecc(g, u, v)? {
        if t != w1 && !g.has_edge(t, w1) {
            b.edge(x, t);
        }
    }
    b.finish(Method::TripleP3, 3)
}
