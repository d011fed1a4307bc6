//! Throughput measurements shared by the CLI and the benchmark suite.

use crate::error::Result;
use crate::graph::{ecc_profile_with, EccProfile, Graph};
use crate::par;
use crate::solver::{exists_extension, Budget, Prune, SearchConfig};
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Serialize)]
pub struct EccTiming {
    pub label: String,
    pub order: usize,
    pub edges: usize,
    pub radius: u32,
    pub diameter: u32,
    pub parallel: bool,
    pub elapsed_ms: f64,
    pub vertices_per_sec: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverRate {
    pub label: String,
    pub r: u32,
    pub k: usize,
    pub runs: u32,
    pub candidates: u64,
    pub elapsed_ms: f64,
    pub candidates_per_sec: f64,
}

/// Times one `ecc_profile` call. Sequential runs execute on a one-thread pool.
pub fn time_ecc(label: &str, g: &Graph, parallel: bool) -> Result<(EccProfile, EccTiming)> {
    let run = || {
        let start = Instant::now();
        let p = ecc_profile_with(g, parallel);
        (p, start.elapsed())
    };
    let (profile, elapsed) = if parallel {
        run()
    } else {
        par::single_threaded(run)
    };
    let profile = profile?;
    let secs = elapsed.as_secs_f64();
    let timing = EccTiming {
        label: label.into(),
        order: g.order(),
        edges: g.edge_count(),
        radius: profile.radius,
        diameter: profile.diameter,
        parallel,
        elapsed_ms: secs * 1e3,
        vertices_per_sec: g.order() as f64 / secs.max(1e-9),
    };
    Ok((profile, timing))
}

/// Repeats `exists_extension(g, r, k)` with default pruning until `min_time`
/// has passed and reports candidates per second.
pub fn solver_rate(
    label: &str,
    g: &Graph,
    r: u32,
    k: usize,
    min_time: Duration,
    parallel: bool,
) -> Result<SolverRate> {
    let cfg = SearchConfig {
        budget: Budget::UNLIMITED,
        prune: Prune::ALL,
        parallel,
    };
    let measure = || -> Result<(u32, u64, Duration)> {
        let start = Instant::now();
        let (mut runs, mut candidates) = (0u32, 0u64);
        while runs == 0 || start.elapsed() < min_time {
            candidates += exists_extension(g, r, k, &cfg)?.candidates;
            runs += 1;
        }
        Ok((runs, candidates, start.elapsed()))
    };
    let (runs, candidates, elapsed) = if parallel {
        measure()?
    } else {
        par::single_threaded(measure)?
    };
    let secs = elapsed.as_secs_f64();
    Ok(SolverRate {
        label: label.into(),
        r,
        k,
        runs,
        candidates,
        elapsed_ms: secs * 1e3,
        candidates_per_sec: candidates as f64 / secs.max(1e-9),
    })
}
