//! Exhaustive search for r-ASC extensions with k added vertices.
//!
//! A candidate is the edge set among the new vertices (`nn`, one bit per
//! pair) together with one guest-neighbourhood mask per new vertex. Candidates
//! are visited by increasing total edge count `m`, then lexicographically in
//! `(nn, mask_0, mask_1, ...)`. For each `m` the space is split into work
//! items by `(nn, mask_0)`; items run in parallel and the earliest item with a
//! witness wins, so the reported witness does not depend on the thread count.

use super::Method;
use crate::constructions::{AddedVertex, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// Largest guest order the enumerator accepts.
pub const MAX_GUEST_ORDER: usize = 24;
/// Largest number of free edge slots the naive reference accepts.
pub const NAIVE_MAX_BITS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prune {
    /// Added vertices have non-decreasing guest masks.
    pub symmetry: bool,
    /// Every added vertex has an edge and every guest component meets some mask.
    pub connectivity: bool,
    /// Stop growing distance balls as soon as a vertex is outside {r, r+1}
    /// or a third non-central vertex appears.
    pub early_ecc: bool,
    /// Hosts below [`min_asc_order`] are not searched.
    pub order_bound: bool,
}

impl Prune {
    pub const ALL: Prune = Prune {
        symmetry: true,
        connectivity: true,
        early_ecc: true,
        order_bound: true,
    };
    pub const NONE: Prune = Prune {
        symmetry: false,
        connectivity: false,
        early_ecc: false,
        order_bound: false,
    };
}

impl Default for Prune {
    fn default() -> Self {
        Prune::ALL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_candidates: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_candidates: None,
        max_time: None,
    };
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: Some(100_000_000),
            max_time: Some(Duration::from_secs(300)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Budget,
    pub prune: Prune,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::default(),
            prune: Prune::ALL,
            parallel: par::parallel_available(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Box<Embedding>),
    Exhausted,
    Aborted,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::Exhausted => "exhausted",
            Outcome::Aborted => "aborted",
        }
    }

    pub fn witness(&self) -> Option<&Embedding> {
        match self {
            Outcome::Found(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub candidates: u64,
    pub elapsed: Duration,
    /// The host order n + k is below [`min_asc_order`], so nothing was searched.
    pub skipped_by_order_bound: bool,
}

/// Lower bound on the order of an r-ASC graph: 2r + 1 for r >= 3, and 4
/// for r = 2 (attained by P_4).
pub fn min_asc_order(r: u32) -> usize {
    if r <= 2 {
        4
    } else {
        2 * r as usize + 1
    }
}

/// Searches every r-ASC host obtained by adding `k` vertices to `g` with
/// edges only between new vertices and from new vertices to `g`.
pub fn exists_extension(g: &Graph, r: u32, k: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("guest must be nonempty".into()));
    }
    if cfg.prune.order_bound && n + k < min_asc_order(r) {
        return Ok(SearchReport {
            outcome: Outcome::Exhausted,
            candidates: 0,
            elapsed: start.elapsed(),
            skipped_by_order_bound: true,
        });
    }
    if k == 0 {
        let ok = crate::analysis::asc_verdict(g)
            .map(|v| v.is_r_asc(r))
            .unwrap_or(false);
        let outcome = if ok {
            Outcome::Found(Box::new(witness_embedding(g, r, 0, 0, &[])?))
        } else {
            Outcome::Exhausted
        };
        return Ok(SearchReport {
            outcome,
            candidates: 1,
            elapsed: start.elapsed(),
            skipped_by_order_bound: false,
        });
    }
    if n > MAX_GUEST_ORDER || n + k > 64 {
        return Err(Error::Argument(format!(
            "search supports guests of order <= {MAX_GUEST_ORDER} and hosts of order <= 64 (got n = {n}, k = {k})"
        )));
    }
    let space = Space::new(g, r, k, cfg.prune);
    let shared = Shared::new(cfg.budget, start);
    let mut outcome = Outcome::Exhausted;
    let mut counted = 0u64;
    for m in 0..=space.max_edges() {
        let items = space.items(m);
        let slots: Vec<AtomicU64> = items.iter().map(|_| AtomicU64::new(0)).collect();
        let hit = par::find_map_first(
            cfg.parallel,
            &(0..items.len()).collect::<Vec<_>>(),
            |&idx| {
                let mut w = Worker::new(&space, &shared);
                let res = w.run_item(items[idx], m);
                w.flush();
                slots[idx].store(w.total, Ordering::Relaxed);
                match res {
                    ItemResult::Nothing => None,
                    other => Some((idx, other)),
                }
            },
        );
        match hit {
            None => counted += slots.iter().map(|s| s.load(Ordering::Relaxed)).sum::<u64>(),
            Some((idx, ItemResult::Witness(nn, masks))) => {
                counted += slots[..=idx]
                    .iter()
                    .map(|s| s.load(Ordering::Relaxed))
                    .sum::<u64>();
                outcome = Outcome::Found(Box::new(witness_embedding(g, r, k, nn, &masks)?));
                break;
            }
            Some(_) => {
                counted = shared.examined.load(Ordering::Relaxed);
                outcome = Outcome::Aborted;
                break;
            }
        }
    }
    Ok(SearchReport {
        outcome,
        candidates: counted,
        elapsed: start.elapsed(),
        skipped_by_order_bound: false,
    })
}

/// Unpruned enumeration of every edge subset, in increasing bit-pattern
/// order, checked with the general eccentricity routine.
pub fn naive_reference(g: &Graph, r: u32, k: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let n = g.order();
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..n).map(move |v| (v, n + i)))
        .chain((0..k).flat_map(|j| (0..j).map(move |i| (n + i, n + j))))
        .collect();
    if slots.len() > NAIVE_MAX_BITS {
        return Err(Error::Argument(format!(
            "naive search is capped at {NAIVE_MAX_BITS} edge slots, instance has {}",
            slots.len()
        )));
    }
    let base = g.with_extra_vertices(k);
    let mut candidates = 0u64;
    for pattern in 0u64..1 << slots.len() {
        candidates += 1;
        let mut h = base.clone();
        for (b, &(a, c)) in slots.iter().enumerate() {
            if pattern >> b & 1 == 1 {
                h.add_edge(a, c);
            }
        }
        if crate::analysis::asc_verdict(&h)
            .map(|v| v.is_r_asc(r))
            .unwrap_or(false)
        {
            let added = (0..k)
                .map(|i| AddedVertex {
                    role: format!("s_{}", i + 1),
                    vertex: n + i,
                })
                .collect();
            let e = Embedding {
                method: Method::Exhaustive,
                r,
                guest: g.clone(),
                host: h,
                map: (0..n).collect(),
                added,
            };
            e.verify()?;
            return Ok(SearchReport {
                outcome: Outcome::Found(Box::new(e)),
                candidates,
                elapsed: start.elapsed(),
                skipped_by_order_bound: false,
            });
        }
    }
    Ok(SearchReport {
        outcome: Outcome::Exhausted,
        candidates,
        elapsed: start.elapsed(),
        skipped_by_order_bound: false,
    })
}

fn witness_embedding(g: &Graph, r: u32, k: usize, nn: u64, masks: &[u64]) -> Result<Embedding> {
    let n = g.order();
    let mut host = g.with_extra_vertices(k);
    for (i, &mask) in masks.iter().enumerate() {
        for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
            host.add_edge(v, n + i);
        }
    }
    for (bit, (i, j)) in nn_pairs(k).into_iter().enumerate() {
        if nn >> bit & 1 == 1 {
            host.add_edge(n + i, n + j);
        }
    }
    let e = Embedding {
        method: Method::Exhaustive,
        r,
        guest: g.clone(),
        host,
        map: (0..n).collect(),
        added: (0..k)
            .map(|i| AddedVertex {
                role: format!("s_{}", i + 1),
                vertex: n + i,
            })
            .collect(),
    };
    e.verify()?;
    Ok(e)
}

/// Pairs of new vertices in bit order: (0,1), (0,2), (1,2), (0,3), ...
fn nn_pairs(k: usize) -> Vec<(usize, usize)> {
    (1..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

struct Space {
    n: usize,
    k: usize,
    r: u32,
    prune: Prune,
    guest_rows: Vec<u64>,
    components: Vec<u64>,
    /// Guest masks grouped by popcount, ascending within each group.
    by_pop: Vec<Vec<u64>>,
    /// Per nn pattern: adjacency rows among new vertices.
    nn_rows: Vec<Vec<u64>>,
}

impl Space {
    fn new(g: &Graph, r: u32, k: usize, prune: Prune) -> Space {
        let n = g.order();
        let guest_rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
        let components = g
            .components()
            .into_iter()
            .map(|c| c.into_iter().fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        let mut by_pop = vec![Vec::new(); n + 1];
        for mask in 0u64..1 << n {
            by_pop[mask.count_ones() as usize].push(mask);
        }
        let pairs = nn_pairs(k);
        let nn_rows = (0u64..1 << pairs.len())
            .map(|nn| {
                let mut rows = vec![0u64; k];
                for (bit, &(i, j)) in pairs.iter().enumerate() {
                    if nn >> bit & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                rows
            })
            .collect();
        Space {
            n,
            k,
            r,
            prune,
            guest_rows,
            components,
            by_pop,
            nn_rows,
        }
    }

    fn max_edges(&self) -> usize {
        self.k * (self.k - 1) / 2 + self.k * self.n
    }

    /// Work items `(nn, mask_0)` that can complete to total edge count `m`.
    fn items(&self, m: usize) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let rest_cap = (self.k - 1) * self.n;
        for nn in 0..self.nn_rows.len() as u64 {
            let p = nn.count_ones() as usize;
            if p > m {
                continue;
            }
            for mask0 in 0u64..1 << self.n {
                let used = p + mask0.count_ones() as usize;
                if used <= m && m - used <= rest_cap {
                    out.push((nn, mask0));
                }
            }
        }
        out
    }
}

struct Shared {
    budget: Budget,
    start: Instant,
    examined: AtomicU64,
    abort: AtomicBool,
}

impl Shared {
    fn new(budget: Budget, start: Instant) -> Shared {
        Shared {
            budget,
            start,
            examined: AtomicU64::new(0),
            abort: AtomicBool::new(false),
        }
    }
}

enum ItemResult {
    Nothing,
    Witness(u64, Vec<u64>),
    Aborted,
}

const FLUSH_EVERY: u64 = 1 << 12;

struct Worker<'a> {
    space: &'a Space,
    shared: &'a Shared,
    masks: Vec<u64>,
    pending: u64,
    total: u64,
    aborted: bool,
}

impl<'a> Worker<'a> {
    fn new(space: &'a Space, shared: &'a Shared) -> Self {
        Worker {
            space,
            shared,
            masks: vec![0; space.k],
            pending: 0,
            total: 0,
            aborted: false,
        }
    }

    fn flush(&mut self) {
        let before = self
            .shared
            .examined
            .fetch_add(self.pending, Ordering::Relaxed);
        self.pending = 0;
        let b = &self.shared.budget;
        if b.max_candidates.is_some_and(|cap| before >= cap)
            || b.max_time.is_some_and(|t| self.shared.start.elapsed() >= t)
        {
            self.shared.abort.store(true, Ordering::Relaxed);
        }
        if self.shared.abort.load(Ordering::Relaxed) {
            self.aborted = true;
        }
    }

    fn run_item(&mut self, (nn, mask0): (u64, u64), m: usize) -> ItemResult {
        if self.shared.abort.load(Ordering::Relaxed) {
            return ItemResult::Aborted;
        }
        self.masks[0] = mask0;
        let rem = m - nn.count_ones() as usize - mask0.count_ones() as usize;
        let found = self.fill(nn, 1, rem);
        if found {
            ItemResult::Witness(nn, self.masks.clone())
        } else if self.aborted {
            ItemResult::Aborted
        } else {
            ItemResult::Nothing
        }
    }

    /// Assigns masks `i..k` with `rem` edges left; true on a witness.
    fn fill(&mut self, nn: u64, i: usize, rem: usize) -> bool {
        let s = self.space;
        if i == s.k {
            return rem == 0 && self.check(nn);
        }
        let floor = if s.prune.symmetry {
            self.masks[i - 1]
        } else {
            0
        };
        if i == s.k - 1 {
            if rem > s.n {
                return false;
            }
            let group = &s.by_pop[rem];
            let from = group.partition_point(|&x| x < floor);
            for &mask in &group[from..] {
                self.masks[i] = mask;
                if self.check(nn) {
                    return true;
                }
                if self.aborted {
                    return false;
                }
            }
            return false;
        }
        let later = (s.k - 1 - i) * s.n;
        for mask in floor..1u64 << s.n {
            let p = mask.count_ones() as usize;
            if p > rem || rem - p > later {
                continue;
            }
            self.masks[i] = mask;
            if self.fill(nn, i + 1, rem - p) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn check(&mut self, nn: u64) -> bool {
        self.total += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
            if self.aborted {
                return false;
            }
        }
        let s = self.space;
        let nn_rows = &s.nn_rows[nn as usize];
        if s.prune.connectivity {
            let mut union = 0u64;
            for (i, &mask) in self.masks.iter().enumerate() {
                if mask == 0 && nn_rows[i] == 0 {
                    return false;
                }
                union |= mask;
            }
            if s.components.iter().any(|&c| c & union == 0) {
                return false;
            }
        }
        let mut rows = [0u64; 64];
        build_rows(&mut rows, &s.guest_rows, &self.masks, nn_rows);
        host_is_r_asc(&rows[..s.n + s.k], s.r, s.prune.early_ecc)
    }
}

fn build_rows(rows: &mut [u64; 64], guest_rows: &[u64], masks: &[u64], nn_rows: &[u64]) {
    let n = guest_rows.len();
    rows[..n].copy_from_slice(guest_rows);
    for (i, &mask) in masks.iter().enumerate() {
        let bit = 1u64 << (n + i);
        let mut m = mask;
        while m != 0 {
            rows[m.trailing_zeros() as usize] |= bit;
            m &= m - 1;
        }
        rows[n + i] = mask | nn_rows[i] << n;
    }
}

/// r-ASC test on adjacency rows of a graph with at most 64 vertices.
///
/// `ball[v]` holds the vertices within distance t of v; one round replaces
/// it by the union of the balls of v's neighbours. ecc(v) is the first t at
/// which the ball is full.
pub(crate) fn host_is_r_asc(rows: &[u64], r: u32, early: bool) -> bool {
    let nv = rows.len();
    let full = if nv == 64 { !0 } else { (1u64 << nv) - 1 };
    let mut ball = [0u64; 64];
    let mut next = [0u64; 64];
    for v in 0..nv {
        ball[v] = rows[v] | 1 << v;
    }
    if early {
        let r = r as usize;
        for t in 1..=r + 1 {
            if t > 1 {
                grow(rows, &ball, &mut next, nv);
                std::mem::swap(&mut ball, &mut next);
            }
            let open = ball[..nv].iter().filter(|&&b| b != full).count();
            if t < r && open != nv {
                return false;
            }
            if t == r && open != 2 {
                return false;
            }
            if t == r + 1 {
                return open == 0;
            }
        }
        unreachable!()
    }
    let mut ecc = [0u32; 64];
    let mut t = 1u32;
    loop {
        let mut open = 0;
        for v in 0..nv {
            if ball[v] == full {
                if ecc[v] == 0 {
                    ecc[v] = t;
                }
            } else {
                open += 1;
            }
        }
        if open == 0 {
            break;
        }
        grow(rows, &ball, &mut next, nv);
        if next[..nv] == ball[..nv] {
            return false;
        }
        std::mem::swap(&mut ball, &mut next);
        t += 1;
    }
    let radius = ecc[..nv].iter().copied().min().unwrap_or(0);
    radius == r && ecc[..nv].iter().filter(|&&e| e != radius).count() == 2
}

fn grow(rows: &[u64], ball: &[u64; 64], next: &mut [u64; 64], nv: usize) {
    for v in 0..nv {
        let mut acc = ball[v];
        let mut nb = rows[v];
        while nb != 0 {
            acc |= ball[nb.trailing_zeros() as usize];
            nb &= nb - 1;
        }
        next[v] = acc;
    }
}
