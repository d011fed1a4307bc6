use serde_json::Value;
use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn asc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn asc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("asc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

/// Leaf facts of a JSON value as (dotted path, value) pairs. Arrays holding
/// objects are indexed; other arrays are one fact.
fn facts(v: &Value, path: String, out: &mut BTreeSet<(String, String)>) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| facts(x, join(k), out)),
        Value::Array(a) if a.iter().any(Value::is_object) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| facts(x, join(&i.to_string()), out)),
        Value::String(s) => {
            out.insert((path, s.clone()));
        }
        _ => {
            out.insert((path, v.to_string()));
        }
    }
}

fn plain_facts(text: &str) -> BTreeSet<(String, String)> {
    text.lines()
        .skip(1)
        .map(|l| {
            let (k, v) = l.split_once(": ").unwrap_or_else(|| {
                let k = l.strip_suffix(':').expect("key: value line");
                (k, "")
            });
            (k.to_string(), v.to_string())
        })
        .collect()
}

#[test]
fn check_reports_the_pendant_cycle_as_three_asc() {
    let o = asc(&["check", "--family", "gadget_c_star:6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().next(),
        Some("3-ASC (r=3), non-central: 2 vertices")
    );
    assert_eq!(out, golden("check_gadget_c_star_6.txt"));
}

#[test]
fn index_of_path_nine_is_two() {
    let o = asc(&[
        "index", "--family", "path:9", "--r", "3", "--max-k", "2", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["k"], 2);
    assert_eq!(v["exhausted_k"], 1);
    assert_eq!(v["schema"], 1);
}

#[test]
fn classify_petersen() {
    let o = asc(&["classify", "--family", "petersen"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("exactly_3 via new_added"));
    assert_eq!(out, golden("classify_petersen.txt"));
}

#[test]
fn info_json_matches_golden() {
    let o = asc(&["info", "--family", "path:4", "--json"]);
    let want: Value = serde_json::from_str(&golden("info_path_4.json")).unwrap();
    assert_eq!(json(&o), want);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| asc(args).status.code();
    assert_eq!(code(&["check", "not-graph6!"]), Some(2));
    assert_eq!(code(&["check", "--family", "cycle:2"]), Some(2));
    assert_eq!(code(&["check", "--family", "hexagon:6"]), Some(2));
    assert_eq!(code(&["classify", "--family", "path:5"]), Some(1));
    assert_eq!(code(&["check", "Cg"]), Some(1));
    assert_eq!(
        code(&["embed", "--family", "cycle:9", "--method", "path"]),
        Some(1)
    );
    assert_eq!(
        code(&[
            "index",
            "--family",
            "k1_join_matchings:3",
            "--max-k",
            "3",
            "--max-candidates",
            "1000"
        ]),
        Some(3)
    );
    assert_eq!(code(&["check"]), Some(2));
    assert_eq!(code(&["check", "Bg", "--family", "path:3"]), Some(2));
}

#[test]
fn family_errors_cite_the_grammar() {
    let o = asc(&["info", "--family", "hexagon:6"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("name[:p1[,p2]]"), "{err}");
}

#[test]
fn reads_graph6_and_edge_lists_from_stdin() {
    let a = asc_stdin(&["info", "-", "--json"], "Bg\n");
    let b = asc_stdin(&["info", "-", "--json"], "3 2\n0 1\n1 2\n");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(json(&a)["eccentricity"], json(&b)["eccentricity"]);
    assert_eq!(
        json(&a)["eccentricity"]["ecc"],
        serde_json::json!([2, 1, 2])
    );
}

#[test]
fn reads_graph_files() {
    let path = scratch("c5.edges");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = asc(&["info", path.to_str().unwrap(), "--json"]);
    assert_eq!(json(&o)["eccentricity"]["radius"], 2);
}

#[test]
fn gen_formats() {
    assert_eq!(stdout(&asc(&["gen", "--family", "path:3"])), "Bg\n");
    assert_eq!(
        stdout(&asc(&["gen", "--family", "path:3", "--format", "edges"])),
        "3 2\n0 1\n1 2\n"
    );
    let o = asc(&["gen", "--family", "path:70"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn manifests_round_trip_through_verify() {
    let embed = scratch("embed.json");
    let o = asc(&[
        "embed",
        "--family",
        "caterpillar:12,6",
        "--out",
        embed.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = asc(&["verify", embed.to_str().unwrap(), "--json"]);
    assert_eq!(
        (v.status.code(), json(&v)["verdict"].clone()),
        (Some(0), "valid".into())
    );

    let big = scratch("big.json");
    asc(&[
        "embed",
        "--family",
        "path:80",
        "--out",
        big.to_str().unwrap(),
    ]);
    assert!(scratch("big.json.edges").is_file());
    assert_eq!(
        json(&asc(&["verify", big.to_str().unwrap(), "--json"]))["verdict"],
        "valid"
    );

    let cert = asc(&["index", "--family", "cycle:4", "--json"]);
    let text = stdout(&cert);
    let v = asc_stdin(&["verify", "-", "--recheck", "--json"], &text);
    assert_eq!(json(&v)["verdict"], "valid");
    assert_eq!(json(&v)["checks"].as_array().unwrap().len(), 6);

    let tampered = text.replace("\"status\": \"exact\"", "\"status\": \"lower_bound\"");
    let v = asc_stdin(&["verify", "-"], &tampered);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).starts_with("invalid certificate"));
}

#[test]
fn plain_and_json_encode_the_same_facts() {
    let cases: &[&[&str]] = &[
        &["info", "--family", "petersen"],
        &["check", "--family", "cycle:6"],
        &["classify", "--family", "cocktail_party:3"],
        &["embed", "--family", "star:3"],
        &["embed", "Bg", "--method", "hat", "--r", "4"],
        &["smallest", "--r", "2"],
        &["verify", "-"],
    ];
    let cert = stdout(&asc(&["index", "--family", "star:3", "--json"]));
    for args in cases {
        let run = |extra: &[&str]| {
            let all: Vec<&str> = args.iter().chain(extra).copied().collect();
            asc_stdin(&all, &cert)
        };
        let plain = run(&[]);
        let js = run(&["--json"]);
        let mut want = BTreeSet::new();
        facts(&json(&js), String::new(), &mut want);
        assert_eq!(plain_facts(&stdout(&plain)), want, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |t: &str| {
        let mut v = json(&asc(&[
            "--threads",
            t,
            "index",
            "--family",
            "cycle:5",
            "--json",
        ]));
        v["elapsed_ms"] = Value::Null;
        for s in v["steps"].as_array_mut().unwrap() {
            s["elapsed_ms"] = Value::Null;
        }
        v
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn smallest_three_asc_order() {
    let v = json(&asc(&["smallest", "--r", "3", "--verify-below", "--json"]));
    assert_eq!(v["order"], 7);
    let orders: Vec<u64> = v["exhausted"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, [2, 3, 4, 5, 6]);
}

#[test]
fn bench_reports_both_measurements() {
    let v = json(&asc(&[
        "bench",
        "--path-order",
        "200",
        "--min-time",
        "0",
        "--json",
    ]));
    assert_eq!(v["ecc"][0]["order"], 202);
    assert_eq!(v["solver"][0]["k"], 2);
    assert!(v["floors"]["ecc_single_thread_under_2s"].as_bool().unwrap());
}
