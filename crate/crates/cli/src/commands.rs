use crate::error::{CliError, EXIT_BUDGET, EXIT_FAILURE};
use crate::input::{load_graph, read_source};
use crate::render::Report;
use crate::{BudgetArgs, Command, Format, GraphInput};
use asc_core::analysis::{asc_verdict, classify_diam2};
use asc_core::bench::{solver_rate, time_ecc};
use asc_core::constructions::{embed_auto, embed_path, embed_with};
use asc_core::graph::{build_family, ecc_profile, write_edge_list, write_graph6, FamilySpec};
use asc_core::par::parallel_available;
use asc_core::report::{verify_manifest, CertificateManifest, EmbeddingManifest};
use asc_core::solver::{exact_index, smallest_asc_order, Budget, IndexStatus, SearchConfig};
use asc_core::Graph;
use serde_json::{json, Value};
use std::path::Path;
use std::time::Duration;

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Info { graph } => info(&graph),
        Command::Check { graph } => check(&graph),
        Command::Classify { graph } => classify(&graph),
        Command::Embed {
            graph,
            r,
            method,
            out,
        } => {
            let (_, g) = load(&graph)?;
            let e = match method {
                Some(m) => embed_with(m, &g, r)?,
                None => embed_auto(&g, r)?,
            };
            let manifest = EmbeddingManifest::new(&e);
            let data = to_value(&manifest)?;
            if let Some(path) = out {
                write_file(&path, &pretty(&data))?;
                if let Some(edges) = EmbeddingManifest::host_edge_list(&e) {
                    write_file(&with_suffix(&path, ".edges"), &edges)?;
                }
            }
            let summary = format!(
                "{}: {} added, host order {}, {}-ASC",
                e.method,
                e.added_count(),
                e.host.order(),
                e.r
            );
            Ok(Report::ok(summary, data))
        }
        Command::Index {
            graph,
            r,
            max_k,
            budget,
            out,
        } => {
            let (_, g) = load(&graph)?;
            let cert = exact_index(&g, r, max_k, &search_config(&budget))?;
            let manifest = CertificateManifest::new(&cert)?;
            let data = to_value(&manifest)?;
            if let Some(path) = out {
                write_file(&path, &pretty(&data))?;
            }
            let summary = match cert.status {
                IndexStatus::Exact(k) => format!("exact({k}): index_{r} = {k}"),
                IndexStatus::LowerBound(k) => format!("lower_bound({k}): index_{r} >= {k}"),
                IndexStatus::Aborted { at_k } => format!(
                    "aborted at k = {at_k}: index_{r} >= {}, budget exhausted",
                    cert.exhausted_k.map_or(0, |k| k + 1)
                ),
            };
            let code = match cert.status {
                IndexStatus::Aborted { .. } => EXIT_BUDGET,
                _ => 0,
            };
            Ok(Report {
                code,
                ..Report::ok(summary, data)
            })
        }
        Command::Smallest {
            r,
            max_n,
            verify_below,
        } => {
            let rep = smallest_asc_order(r, max_n, verify_below)?;
            let data = json!({
                "r": rep.r,
                "max_n": rep.max_n,
                "order": rep.order,
                "witness_graph6": rep.witness.as_ref().and_then(write_graph6),
                "exhausted": rep.exhausted.iter().map(|&(n, graphs)| json!({"order": n, "graphs": graphs})).collect::<Vec<_>>(),
            });
            let summary = match rep.order {
                Some(n) => format!("smallest {r}-ASC order: {n}"),
                None => format!("no {r}-ASC graph of order <= {max_n}"),
            };
            Ok(Report::ok(summary, data))
        }
        Command::Gen { family, format } => gen(&family, format),
        Command::Verify {
            manifest,
            recheck,
            budget,
        } => {
            let (_, text) = read_source(&manifest)?;
            let cfg = search_config(&budget);
            let rep = verify_manifest(&text, recheck.then_some(&cfg))?;
            let failed: Vec<&str> = rep
                .checks
                .iter()
                .filter(|c| !c.ok)
                .map(|c| c.name.as_str())
                .collect();
            let summary = if failed.is_empty() {
                format!("{} {}", rep.verdict, rep.kind)
            } else {
                format!("{} {}: failed {}", rep.verdict, rep.kind, failed.join(", "))
            };
            let code = if rep.is_valid() { 0 } else { EXIT_FAILURE };
            Ok(Report {
                code,
                ..Report::ok(summary, to_value(&rep)?)
            })
        }
        Command::Bench {
            path_order,
            family,
            min_time,
        } => bench(path_order, &family, min_time),
    }
}

fn load(input: &GraphInput) -> Result<(String, Graph)> {
    load_graph(input.input.as_deref(), input.family.as_ref())
}

fn info(input: &GraphInput) -> Result<Report> {
    let (label, g) = load(input)?;
    let components = g.components().len();
    let mut data = json!({
        "graph": label,
        "order": g.order(),
        "edges": g.edge_count(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": components == 1,
        "components": components,
    });
    let summary = if components == 1 {
        let p = ecc_profile(&g)?;
        let line = format!(
            "order {}, {} edges, radius {}, diameter {}",
            g.order(),
            g.edge_count(),
            p.radius,
            p.diameter
        );
        data["eccentricity"] = to_value(&p)?;
        line
    } else {
        format!(
            "order {}, {} edges, disconnected ({components} components), eccentricity undefined",
            g.order(),
            g.edge_count()
        )
    };
    Ok(Report::ok(summary, data))
}

fn check(input: &GraphInput) -> Result<Report> {
    let (label, g) = load(input)?;
    let v = asc_verdict(&g)?;
    let summary = match v.r {
        Some(r) => format!(
            "{r}-ASC (r={r}), non-central: {} vertices",
            v.non_central.len()
        ),
        None => format!(
            "not ASC (radius {}), non-central: {} vertices",
            v.radius,
            v.non_central.len()
        ),
    };
    let mut data = json!({ "graph": label });
    merge(&mut data, to_value(&v)?);
    Ok(Report::ok(summary, data))
}

fn classify(input: &GraphInput) -> Result<Report> {
    let (label, g) = load(input)?;
    let c = classify_diam2(&g)?;
    let applied: Vec<&str> = c.applied.iter().map(|t| t.name()).collect();
    let summary = if applied.is_empty() {
        c.verdict.name().to_string()
    } else {
        format!("{} via {}", c.verdict.name(), applied.join(", "))
    };
    let mut data = json!({ "graph": label });
    merge(&mut data, to_value(&c)?);
    Ok(Report::ok(summary, data))
}

fn gen(spec: &FamilySpec, format: Format) -> Result<Report> {
    let g = build_family(spec)?;
    let (name, text) = match format {
        Format::Graph6 => (
            "graph6",
            write_graph6(&g).ok_or_else(|| {
                CliError::failure(format!(
                    "order {} exceeds graph6 support, use --format edges",
                    g.order()
                ))
            })?,
        ),
        Format::Edges => ("edges", write_edge_list(&g)),
    };
    let text = text.trim_end().to_string();
    let data = json!({
        "family": spec.to_string(),
        "order": g.order(),
        "edges": g.edge_count(),
        "format": name,
        "text": text,
    });
    Ok(Report::ok(text, data).raw())
}

fn bench(path_order: usize, families: &[FamilySpec], min_time: f64) -> Result<Report> {
    let host = embed_path(path_order)?.host;
    let mut graphs = vec![(format!("path:{path_order} host"), host)];
    for spec in families {
        graphs.push((spec.to_string(), build_family(spec)?));
    }
    let modes: &[bool] = if parallel_available() {
        &[false, true]
    } else {
        &[false]
    };
    let mut ecc = Vec::new();
    for (label, g) in &graphs {
        for &parallel in modes {
            ecc.push(time_ecc(label, g, parallel)?.1);
        }
    }
    let p9 = build_family(&FamilySpec::path(9))?;
    let min_time = Duration::from_secs_f64(min_time.max(0.0));
    let mut solver = Vec::new();
    for &parallel in modes {
        solver.push(solver_rate("path:9", &p9, 3, 2, min_time, parallel)?);
    }
    let ecc_ms = ecc[0].elapsed_ms;
    let rate = solver
        .iter()
        .map(|s| s.candidates_per_sec)
        .fold(0.0, f64::max);
    let summary = format!(
        "ecc on {} ({} vertices): {ecc_ms:.1} ms single-threaded; solver {rate:.3e} candidates/s",
        ecc[0].label, ecc[0].order
    );
    let data = json!({
        "parallel_available": parallel_available(),
        "ecc": to_value(&ecc)?,
        "solver": to_value(&solver)?,
        "floors": {
            "ecc_single_thread_under_2s": ecc_ms < 2000.0,
            "solver_at_least_1e5_per_s": rate >= 1e5,
        },
    });
    Ok(Report::ok(summary, data))
}

fn search_config(b: &BudgetArgs) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if b.unlimited {
        cfg.budget = Budget::UNLIMITED;
    }
    if let Some(c) = b.max_candidates {
        cfg.budget.max_candidates = Some(c);
    }
    if let Some(t) = b.max_time {
        cfg.budget.max_time = Some(Duration::from_secs_f64(t.max(0.0)));
    }
    cfg
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| CliError::failure(format!("serialization failed: {e}")))
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default() + "\n"
}

fn with_suffix(path: &Path, suffix: &str) -> std::path::PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    s.into()
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| CliError::failure(format!("cannot write {}: {e}", path.display())))
}
