//! Exact θ_r by exhaustive search, and smallest r-ASC orders.

mod search;
mod smallest;

pub use search::{
    exists_extension, min_asc_order, naive_reference, Budget, Outcome, Prune, SearchConfig,
    SearchReport, MAX_GUEST_ORDER, NAIVE_MAX_BITS,
};
pub use smallest::{graphs_by_order, smallest_asc_order, SmallestReport, MAX_ENUMERATED_ORDER};

pub(crate) use crate::constructions::Method;
pub(crate) use search::host_is_r_asc;

use crate::constructions::Embedding;
use crate::error::{Error, Result};
use crate::graph::{write_edge_list, Graph};
use sha2::{Digest, Sha256};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexStatus {
    /// θ_r equals the value; a witness is attached.
    Exact(usize),
    /// θ_r is at least the value; every smaller k was exhausted.
    LowerBound(usize),
    /// The budget ran out while searching `at_k`.
    Aborted { at_k: usize },
}

impl IndexStatus {
    pub fn name(&self) -> &'static str {
        match self {
            IndexStatus::Exact(_) => "exact",
            IndexStatus::LowerBound(_) => "lower_bound",
            IndexStatus::Aborted { .. } => "aborted",
        }
    }

    pub fn value(&self) -> usize {
        match *self {
            IndexStatus::Exact(k) | IndexStatus::LowerBound(k) => k,
            IndexStatus::Aborted { at_k } => at_k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    OrderBound,
    Exhausted,
    Witness,
    Aborted,
}

impl StepOutcome {
    pub fn name(self) -> &'static str {
        match self {
            StepOutcome::OrderBound => "order_bound",
            StepOutcome::Exhausted => "exhausted",
            StepOutcome::Witness => "witness",
            StepOutcome::Aborted => "aborted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub k: usize,
    pub outcome: StepOutcome,
    pub candidates: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCertificate {
    pub guest_id: String,
    pub guest: Graph,
    pub r: u32,
    pub status: IndexStatus,
    pub witness: Option<Embedding>,
    /// Largest k with no witness among extensions of at most k vertices.
    pub exhausted_k: Option<usize>,
    pub steps: Vec<StepRecord>,
    pub candidates_examined: u64,
    pub elapsed: Duration,
}

impl IndexCertificate {
    /// Re-checks the witness and the status/exhaustion arithmetic.
    pub fn verify(&self) -> Result<()> {
        if self.guest_id != guest_id(&self.guest) {
            return Err(Error::Internal(
                "guest hash does not match the guest".into(),
            ));
        }
        match (self.status, &self.witness) {
            (IndexStatus::Exact(k), Some(w)) => {
                if w.added_count() != k || w.r != self.r || w.guest != self.guest {
                    return Err(Error::Internal(format!(
                        "witness does not match exact({k})"
                    )));
                }
                w.verify()?;
                if self.exhausted_k != k.checked_sub(1) {
                    return Err(Error::Internal(format!(
                        "exact({k}) needs exhausted_k = k - 1"
                    )));
                }
            }
            (IndexStatus::Exact(_), None) => {
                return Err(Error::Internal("exact status without witness".into()))
            }
            (IndexStatus::LowerBound(k), None) => {
                if k == 0 || self.exhausted_k != Some(k - 1) {
                    return Err(Error::Internal(format!(
                        "lower_bound({k}) needs exhausted_k = k - 1"
                    )));
                }
            }
            (IndexStatus::Aborted { at_k }, None) => {
                if self.exhausted_k != at_k.checked_sub(1) {
                    return Err(Error::Internal(
                        "aborted status must follow the last exhausted k".into(),
                    ));
                }
            }
            _ => {
                return Err(Error::Internal(
                    "witness attached to a non-exact status".into(),
                ))
            }
        }
        Ok(())
    }
}

/// SHA-256 of the guest's edge-list text.
pub fn guest_id(g: &Graph) -> String {
    let digest = Sha256::digest(write_edge_list(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Searches k = 0, 1, ..., max_k and stops at the first witness or abort.
pub fn exact_index(
    g: &Graph,
    r: u32,
    max_k: usize,
    cfg: &SearchConfig,
) -> Result<IndexCertificate> {
    if r < 2 {
        return Err(Error::Domain(format!("radius must be at least 2, got {r}")));
    }
    if g.is_empty() {
        return Err(Error::Precondition("guest must be nonempty".into()));
    }
    let start = Instant::now();
    let mut steps = Vec::new();
    let mut exhausted_k = None;
    let mut status = IndexStatus::LowerBound(max_k + 1);
    let mut witness = None;
    let mut total = 0;
    for k in 0..=max_k {
        let rep = exists_extension(g, r, k, cfg)?;
        total += rep.candidates;
        let outcome = match rep.outcome {
            Outcome::Found(e) => {
                witness = Some(*e);
                status = IndexStatus::Exact(k);
                StepOutcome::Witness
            }
            Outcome::Exhausted if rep.skipped_by_order_bound => StepOutcome::OrderBound,
            Outcome::Exhausted => StepOutcome::Exhausted,
            Outcome::Aborted => {
                status = IndexStatus::Aborted { at_k: k };
                StepOutcome::Aborted
            }
        };
        steps.push(StepRecord {
            k,
            outcome,
            candidates: rep.candidates,
            elapsed: rep.elapsed,
        });
        match outcome {
            StepOutcome::OrderBound | StepOutcome::Exhausted => exhausted_k = Some(k),
            _ => break,
        }
    }
    Ok(IndexCertificate {
        guest_id: guest_id(g),
        guest: g.clone(),
        r,
        status,
        witness,
        exhausted_k,
        steps,
        candidates_examined: total,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilyKind, FamilySpec};

    fn quick() -> SearchConfig {
        SearchConfig {
            budget: Budget::UNLIMITED,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn small_indices() {
        let cases = [
            (FamilySpec::path(3), 4),
            (FamilySpec::cycle(4), 4),
            (FamilySpec::complete(3), 5),
        ];
        for (spec, want) in cases {
            let g = build_family(&spec).unwrap();
            let cert = exact_index(&g, 3, 6, &quick()).unwrap();
            assert_eq!(cert.status, IndexStatus::Exact(want), "{spec}");
            assert_eq!(cert.exhausted_k, Some(want - 1));
            cert.verify().unwrap();
        }
    }

    #[test]
    fn asc_guest_has_index_zero() {
        let g = build_family(&FamilySpec::new(FamilyKind::GadgetCStar, vec![6])).unwrap();
        let cert = exact_index(&g, 3, 2, &quick()).unwrap();
        assert_eq!(cert.status, IndexStatus::Exact(0));
        assert_eq!(cert.exhausted_k, None);
        cert.verify().unwrap();
    }

    #[test]
    fn lower_bound_and_errors() {
        let g = build_family(&FamilySpec::path(9)).unwrap();
        let cert = exact_index(&g, 3, 1, &quick()).unwrap();
        assert_eq!(cert.status, IndexStatus::LowerBound(2));
        cert.verify().unwrap();
        assert!(matches!(
            exact_index(&g, 1, 1, &quick()),
            Err(Error::Domain(_))
        ));
        assert_eq!(guest_id(&g).len(), 64);
    }
}
