//! JSON manifests for embeddings and index certificates, and a verifier that
//! re-checks them from the manifest alone.

use crate::constructions::{AddedVertex, Embedding, Method};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_edge_list, write_graph6, Graph};
use crate::solver::{
    exists_extension, guest_id, IndexCertificate, IndexStatus, Outcome, SearchConfig,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// A graph as graph6 when it fits, otherwise as an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
}

impl GraphRef {
    pub fn of(g: &Graph) -> GraphRef {
        match write_graph6(g) {
            Some(s) => GraphRef {
                graph6: Some(s),
                order: None,
                edges: None,
            },
            None => GraphRef {
                graph6: None,
                order: Some(g.order()),
                edges: Some(g.edges().collect()),
            },
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match (&self.graph6, self.order, &self.edges) {
            (Some(s), _, _) => Ok(parse_graph6(s)?),
            (None, Some(n), Some(edges)) => Graph::from_edges(n, edges),
            _ => Err(Error::Argument(
                "graph reference needs graph6 or order and edges".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingManifest {
    pub schema: u32,
    pub method: Method,
    pub r: u32,
    pub added: Vec<AddedVertex>,
    pub map: Vec<usize>,
    pub host_graph6: Option<String>,
    pub guest_graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<GraphRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guest: Option<GraphRef>,
}

impl EmbeddingManifest {
    pub fn new(e: &Embedding) -> EmbeddingManifest {
        let host_graph6 = write_graph6(&e.host);
        let guest_graph6 = write_graph6(&e.guest);
        EmbeddingManifest {
            schema: SCHEMA,
            method: e.method,
            r: e.r,
            added: e.added.clone(),
            map: e.map.clone(),
            host: host_graph6.is_none().then(|| GraphRef::of(&e.host)),
            guest: guest_graph6.is_none().then(|| GraphRef::of(&e.guest)),
            host_graph6,
            guest_graph6,
        }
    }

    pub fn embedding(&self) -> Result<Embedding> {
        check_schema(self.schema)?;
        Ok(Embedding {
            method: self.method,
            r: self.r,
            guest: load(&self.guest_graph6, &self.guest)?,
            host: load(&self.host_graph6, &self.host)?,
            map: self.map.clone(),
            added: self.added.clone(),
        })
    }

    /// Edge-list text for hosts that graph6 cannot hold.
    pub fn host_edge_list(e: &Embedding) -> Option<String> {
        write_graph6(&e.host)
            .is_none()
            .then(|| write_edge_list(&e.host))
    }
}

fn load(graph6: &Option<String>, full: &Option<GraphRef>) -> Result<Graph> {
    match (graph6, full) {
        (Some(s), _) => Ok(parse_graph6(s)?),
        (None, Some(g)) => g.graph(),
        (None, None) => Err(Error::Argument("manifest is missing a graph".into())),
    }
}

fn check_schema(schema: u32) -> Result<()> {
    if schema != SCHEMA {
        return Err(Error::Argument(format!(
            "unsupported schema {schema}, expected {SCHEMA}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub k: usize,
    pub outcome: String,
    pub candidates: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateManifest {
    pub schema: u32,
    pub guest_graph6: String,
    pub guest_id: String,
    pub r: u32,
    pub status: String,
    pub k: usize,
    pub witness_graph6: Option<String>,
    pub witness_map: Option<Vec<usize>>,
    pub witness_added: Option<Vec<AddedVertex>>,
    pub exhausted_k: Option<usize>,
    pub candidates_examined: u64,
    pub elapsed_ms: u64,
    /// How each k was settled; exhausted entries are the lower-bound evidence.
    pub steps: Vec<StepJson>,
}

impl CertificateManifest {
    pub fn new(c: &IndexCertificate) -> Result<CertificateManifest> {
        let guest_graph6 = write_graph6(&c.guest)
            .ok_or_else(|| Error::Argument("certificate guests must fit graph6".into()))?;
        Ok(CertificateManifest {
            schema: SCHEMA,
            guest_graph6,
            guest_id: c.guest_id.clone(),
            r: c.r,
            status: c.status.name().into(),
            k: c.status.value(),
            witness_graph6: c.witness.as_ref().and_then(|w| write_graph6(&w.host)),
            witness_map: c.witness.as_ref().map(|w| w.map.clone()),
            witness_added: c.witness.as_ref().map(|w| w.added.clone()),
            exhausted_k: c.exhausted_k,
            candidates_examined: c.candidates_examined,
            elapsed_ms: c.elapsed.as_millis() as u64,
            steps: c
                .steps
                .iter()
                .map(|s| StepJson {
                    k: s.k,
                    outcome: s.outcome.name().into(),
                    candidates: s.candidates,
                    elapsed_ms: s.elapsed.as_millis() as u64,
                })
                .collect(),
        })
    }

    pub fn status(&self) -> Result<IndexStatus> {
        match self.status.as_str() {
            "exact" => Ok(IndexStatus::Exact(self.k)),
            "lower_bound" => Ok(IndexStatus::LowerBound(self.k)),
            "aborted" => Ok(IndexStatus::Aborted { at_k: self.k }),
            other => Err(Error::Argument(format!(
                "unknown certificate status '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: &'static str,
    pub verdict: &'static str,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(kind: &'static str, checks: Vec<Check>) -> VerifyReport {
        let verdict = if checks.iter().all(|c| c.ok) {
            "valid"
        } else {
            "invalid"
        };
        VerifyReport {
            kind,
            verdict,
            checks,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verdict == "valid"
    }
}

fn check(name: &str, res: Result<()>) -> Check {
    Check {
        name: name.into(),
        ok: res.is_ok(),
        detail: res.err().map(|e| e.to_string()).unwrap_or_default(),
    }
}

/// Verifies an embedding or certificate manifest. With `recheck`, every k
/// claimed exhausted is searched again under that configuration.
pub fn verify_manifest(json: &str, recheck: Option<&SearchConfig>) -> Result<VerifyReport> {
    let value: serde_json::Value = serde_json::from_str(json)
        .map_err(|e| Error::Argument(format!("manifest is not valid JSON: {e}")))?;
    if value.get("guest_id").is_some() {
        let m: CertificateManifest = serde_json::from_value(value)
            .map_err(|e| Error::Argument(format!("malformed certificate: {e}")))?;
        verify_certificate(&m, recheck)
    } else {
        let m: EmbeddingManifest = serde_json::from_value(value)
            .map_err(|e| Error::Argument(format!("malformed embedding manifest: {e}")))?;
        let res = m.embedding().and_then(|e| e.verify());
        Ok(VerifyReport::new(
            "embedding",
            vec![check("embedding", res)],
        ))
    }
}

pub fn verify_certificate(
    m: &CertificateManifest,
    recheck: Option<&SearchConfig>,
) -> Result<VerifyReport> {
    check_schema(m.schema)?;
    let guest = parse_graph6(&m.guest_graph6)?;
    let status = m.status()?;
    let mut checks = vec![check(
        "guest_id",
        if guest_id(&guest) == m.guest_id {
            Ok(())
        } else {
            Err(Error::Internal("guest hash mismatch".into()))
        },
    )];
    let witness = match (&m.witness_graph6, &m.witness_map, &m.witness_added) {
        (Some(h), Some(map), Some(added)) => Some(Embedding {
            method: Method::Exhaustive,
            r: m.r,
            guest: guest.clone(),
            host: parse_graph6(h)?,
            map: map.clone(),
            added: added.clone(),
        }),
        _ => None,
    };
    let cert = IndexCertificate {
        guest_id: m.guest_id.clone(),
        guest: guest.clone(),
        r: m.r,
        status,
        witness,
        exhausted_k: m.exhausted_k,
        steps: Vec::new(),
        candidates_examined: m.candidates_examined,
        elapsed: std::time::Duration::from_millis(m.elapsed_ms),
    };
    checks.push(check("status_and_witness", cert.verify()));
    if let (Some(cfg), Some(top)) = (recheck, m.exhausted_k) {
        for k in 0..=top {
            let res = exists_extension(&guest, m.r, k, cfg).and_then(|rep| match rep.outcome {
                Outcome::Exhausted => Ok(()),
                Outcome::Found(_) => Err(Error::Internal(format!("k = {k} has a witness"))),
                Outcome::Aborted => Err(Error::Internal(format!(
                    "recheck of k = {k} ran out of budget"
                ))),
            });
            checks.push(check(&format!("exhausted_k{k}"), res));
        }
    }
    Ok(VerifyReport::new("certificate", checks))
}
