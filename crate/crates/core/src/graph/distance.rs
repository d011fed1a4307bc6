use super::{iter_bits, Graph};
use crate::error::{Error, Result};
use crate::par;
use serde::Serialize;

/// Marker for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    /// Largest finite entry of row `u`, or `None` if some vertex is unreachable from `u`.
    pub fn row_max(&self, u: usize) -> Option<u32> {
        let row = self.row(u);
        if row.contains(&UNREACHABLE) {
            None
        } else {
            row.iter().copied().max()
        }
    }
}

/// Breadth-first search from every vertex, expanding frontiers a word at a time.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let rows: Vec<Vec<u32>> = par::map_range(n, |s| bfs_row(g, s));
    DistanceMatrix {
        order: n,
        dist: rows.into_iter().flatten().collect(),
    }
}

/// Hop distances from `s`, with [`UNREACHABLE`] for other components.
pub fn distances_from(g: &Graph, s: usize) -> Vec<u32> {
    bfs_row(g, s)
}

fn bfs_row(g: &Graph, s: usize) -> Vec<u32> {
    let stride = g.stride();
    let mut out = vec![UNREACHABLE; g.order()];
    let mut seen = vec![0u64; stride];
    let mut frontier = vec![0u64; stride];
    let mut next = vec![0u64; stride];
    seen[s / 64] |= 1 << (s % 64);
    frontier[s / 64] |= 1 << (s % 64);
    out[s] = 0;
    let mut depth = 0;
    loop {
        depth += 1;
        next.iter_mut().for_each(|w| *w = 0);
        for u in iter_bits(&frontier) {
            for (nw, rw) in next.iter_mut().zip(g.row(u)) {
                *nw |= rw;
            }
        }
        let mut any = false;
        for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
            *nw &= !*sw;
            *sw |= *nw;
            any |= *nw != 0;
        }
        if !any {
            break;
        }
        for v in iter_bits(&next) {
            out[v] = depth;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    out
}

/// Per-vertex eccentricities with radius, diameter, center and periphery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccProfile {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    pub periphery: Vec<usize>,
}

impl EccProfile {
    pub fn from_ecc(ecc: Vec<u32>) -> Self {
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
        let periphery = (0..ecc.len()).filter(|&v| ecc[v] == diameter).collect();
        EccProfile {
            ecc,
            radius,
            diameter,
            center,
            periphery,
        }
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }
}

/// Eccentricity profile of a connected graph.
///
/// Runs a multi-source BFS with 64 sources per batch: each vertex carries a
/// word whose bit `i` records whether source `i` of the batch has reached it,
/// so one sweep over the adjacency lists advances 64 searches by a level.
pub fn ecc_profile(g: &Graph) -> Result<EccProfile> {
    ecc_profile_with(g, true)
}

/// [`ecc_profile`] with explicit control over batch parallelism.
pub fn ecc_profile_with(g: &Graph, parallel: bool) -> Result<EccProfile> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition(
            "eccentricity of the empty graph".into(),
        ));
    }
    let (offsets, targets) = csr(g);
    let batches = n.div_ceil(64);
    let per_batch: Vec<Option<Vec<u32>>> = par::map_range_with(parallel, batches, |b| {
        ms_bfs_batch(n, &offsets, &targets, b * 64, (b * 64 + 64).min(n))
    });
    let mut ecc = Vec::with_capacity(n);
    for batch in per_batch {
        ecc.extend(batch.ok_or(Error::Disconnected)?);
    }
    Ok(EccProfile::from_ecc(ecc))
}

fn csr(g: &Graph) -> (Vec<usize>, Vec<u32>) {
    let n = g.order();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut targets = Vec::new();
    offsets.push(0);
    for v in 0..n {
        targets.extend(g.neighbors(v).map(|u| u as u32));
        offsets.push(targets.len());
    }
    (offsets, targets)
}

fn ms_bfs_batch(
    n: usize,
    offsets: &[usize],
    targets: &[u32],
    lo: usize,
    hi: usize,
) -> Option<Vec<u32>> {
    let lanes = hi - lo;
    let full: u64 = if lanes == 64 { !0 } else { (1u64 << lanes) - 1 };
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    let mut next = vec![0u64; n];
    for (i, s) in (lo..hi).enumerate() {
        seen[s] = 1 << i;
        frontier[s] = 1 << i;
    }
    let mut ecc = vec![0u32; lanes];
    let mut level = 0u32;
    loop {
        level += 1;
        let mut advanced = 0u64;
        for v in 0..n {
            let mut acc = 0u64;
            for &u in &targets[offsets[v]..offsets[v + 1]] {
                acc |= frontier[u as usize];
            }
            acc &= !seen[v];
            next[v] = acc;
            advanced |= acc;
        }
        if advanced == 0 {
            break;
        }
        for v in 0..n {
            seen[v] |= next[v];
        }
        let mut bits = advanced;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            ecc[b] = level;
            bits &= bits - 1;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    if seen.iter().any(|&s| s & full != full) {
        return None;
    }
    Some(ecc)
}
