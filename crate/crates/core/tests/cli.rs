mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::fixture;
use entrel::discovery::build_fdag;
use entrel::formats::fdag_to_json;
use entrel::ingest::{read_log, IngestConfig};
use serde_json::Value;
use tempfile::TempDir;

fn entrel<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_entrel"))
        .args(args)
        .output()
        .unwrap()
}

fn ok(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&ok(out)).unwrap()
}

fn f(name: &str) -> String {
    fixture(name).to_str().unwrap().to_owned()
}

#[test]
fn stats_of_running_examples() {
    let s = json(&entrel(["stats", "--json", &f("e1.xes")]));
    assert_eq!(s["variants"], 7);
    assert_eq!(s["traces"], 64);
    let s = json(&entrel(["stats", &f("e2.csv"), "--json"]));
    assert_eq!(s["traces"], 1000);
    let text = ok(&entrel(["stats", &f("e1.csv")]));
    assert!(text.contains("variants           7"));
}

#[test]
fn missing_or_unknown_files_exit_2() {
    let out = entrel(["stats", "/nonexistent/log.xes"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("log.xes"));
    assert_eq!(entrel(["stats", &f("a1.json")]).status.code(), Some(2));
    assert_eq!(entrel(["frobnicate"]).status.code(), Some(2));
}

#[test]
fn discover_full_and_filtered() {
    let e1 = read_log(&fixture("e1.xes"), &IngestConfig::default()).unwrap();
    let out = ok(&entrel([
        "discover",
        &f("e1.xes"),
        "--threshold",
        "1.0",
        "--format",
        "fdag",
    ]));
    assert_eq!(out, fdag_to_json(&build_fdag(&e1)));

    let g = json(&entrel(["discover", &f("e1.xes"), "-k", "0.5"]));
    assert_eq!(g["actions"], serde_json::json!([]));
    assert_eq!(
        g["arcs"],
        serde_json::json!([{"from": "__input__", "to": "__output__", "freq": 32}])
    );

    for bad in ["0", "1.5", "-0.1", "x"] {
        assert_eq!(
            entrel(["discover", &f("e1.xes"), "-k", bad]).status.code(),
            Some(2)
        );
    }
}

#[test]
fn discover_writes_files() {
    let dir = TempDir::new().unwrap();
    let model = dir.path().join("m.json");
    let dot = dir.path().join("m.dot");
    let out = entrel([
        "discover",
        &f("e2.xes"),
        "--format",
        "sdfa",
        "--out",
        model.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(ok(&out).is_empty());
    let m: Value = serde_json::from_str(&fs::read_to_string(&model).unwrap()).unwrap();
    assert_eq!(m["initial"], "__input__");
    let d = fs::read_to_string(&dot).unwrap();
    assert!(d.starts_with("digraph sdfa {"));
    assert!(d.contains("label=\"a(0.75)\""));
}

#[test]
fn convert_dfg_to_sdfa() {
    let m = json(&entrel(["convert", &f("dfg.json"), "--to", "sdfa"]));
    let probs: Vec<(String, String, String)> = m["transitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["from"].as_str().unwrap().to_owned(),
                t["action"].as_str().unwrap().to_owned(),
                t["prob"].as_str().unwrap().to_owned(),
            )
        })
        .collect();
    let want = [
        ("__input__", "a", "0.75"),
        ("a", "b", "0.5"),
        ("b", "c", "0.5"),
        ("c", "d", "0.25"),
        ("c", "e", "0.25"),
        ("d", "d", "0.2"),
        ("d", "e", "0.4"),
    ];
    assert_eq!(probs.len(), want.len());
    for (w, g) in want.iter().zip(&probs) {
        assert_eq!((w.0, w.1, w.2), (g.0.as_str(), g.1.as_str(), g.2.as_str()));
    }
}

#[test]
fn convert_to_dot() {
    let d = ok(&entrel(["convert", &f("dfg.json"), "--to", "dot"]));
    assert!(d.contains("\"c\" -> \"d\" [label=\"12\"]"));
    assert!(d.contains("\"d\" -> \"d\" [label=\"3\"]"));
    let d = ok(&entrel(["convert", &f("a2.json"), "--to", "dot"]));
    assert!(d.contains("\"q4\" [shape=circle, label=\"0.4\", xlabel=\"q4\"]"));
    assert!(d.contains("\"q5\" [shape=circle, label=\"1\", xlabel=\"q5\"]"));
    assert!(d.contains("label=\"d(0.2)\""));
    assert_eq!(
        entrel(["convert", &f("a2.json"), "--to", "png"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn relevance_reports() {
    let r = json(&entrel([
        "relevance",
        "--json",
        &f("e2.xes"),
        &f("a2.json"),
    ]));
    assert!((r["relevance"].as_f64().unwrap() - 4.22).abs() < 0.005);
    assert_eq!(r["model_size"], 13);
    assert!(r.get("per_variant").is_none());

    let r = json(&entrel([
        "relevance",
        "--json",
        &f("e1.csv"),
        &f("a1.json"),
    ]));
    assert!((r["relevance"].as_f64().unwrap() - 1.97).abs() < 0.005);
    assert_eq!(r["rho"], 1.0);

    let r = json(&entrel([
        "relevance",
        "--json",
        "--per-variant",
        &f("e2.xes"),
        &f("a1.json"),
    ]));
    assert!((r["background_bits"].as_f64().unwrap() - 2.33).abs() < 0.005);
    let rows = r["per_variant"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let abce = rows
        .iter()
        .find(|v| v["trace"] == serde_json::json!(["a", "b", "c", "e"]))
        .unwrap();
    assert_eq!(abce["fits"], false);

    let text = ok(&entrel([
        "relevance",
        &f("e2.xes"),
        &f("dfg.json"),
        "--per-variant",
        "-q",
    ]));
    assert!(text.contains("relevance          4.216798"));
    assert!(text.contains("\n50\ttrue\t"));
}

#[test]
fn invalid_model_exits_1_with_diagnostics() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(
        &p,
        r#"{"states":["s"],"initial":"s","transitions":[
            {"from":"s","action":"a","to":"s","prob":"0.7"},
            {"from":"s","action":"b","to":"s","prob":"0.6"}]}"#,
    )
    .unwrap();
    let out = entrel(["relevance", &f("e1.xes"), p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds 1"), "{err}");
}

#[test]
fn sweep_rows() {
    let out = ok(&entrel(["sweep", &f("e1.xes"), "--thresholds", "1.0"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "threshold,states,edges,size,rho,selector_bits,background_bits,model_bits,relevance"
    );
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!((cols[4], cols[6]), ("1.000000", "0.000000"));

    let out = ok(&entrel(["sweep", &f("e1.xes"), "--thresholds", "0.5,1.0"]));
    let sizes: Vec<u64> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(sizes.len(), 2);
    assert!(sizes[0] <= sizes[1]);

    for bad in ["", ",", "0.5,0.2", "0:1:0.1"] {
        assert_eq!(
            entrel(["sweep", &f("e1.xes"), "--thresholds", bad])
                .status
                .code(),
            Some(2),
            "{bad:?}"
        );
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn pareto_over_files() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "alpha.csv",
        "model,size,relevance\nm1,10,5.0\nm2,14,4.5\n",
    );
    let b = write(
        dir.path(),
        "beta.csv",
        "method,model,size,relevance\nbeta,m3,12,4.0\nbeta,m4,10,5.0\n",
    );
    let out = ok(&entrel(["pareto", &a, &b]));
    assert_eq!(
        out,
        "method,model,size,relevance\nalpha,m1,10,5.000000\nbeta,m3,12,4.000000\n"
    );
    assert_eq!(ok(&entrel(["pareto", &b, &a])), out);

    let all = ok(&entrel(["pareto", "--all", &a, &b]));
    assert!(all.contains("alpha,m2,14,4.500000,true"));

    let bad = write(dir.path(), "gamma.csv", "size,score\n1,2\n");
    let out = entrel(["pareto", &a, &bad]);
    assert_ne!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("relevance") && err.contains("gamma.csv"),
        "{err}"
    );
}

#[test]
fn pareto_reads_sweep_output() {
    let dir = TempDir::new().unwrap();
    let s = dir.path().join("dfm.csv");
    ok(&entrel([
        "sweep",
        &f("e2.xes"),
        "--thresholds",
        "0.1:1:0.1",
        "-o",
        s.to_str().unwrap(),
    ]));
    let front = ok(&entrel(["pareto", s.to_str().unwrap()]));
    assert!(front.starts_with("method,model,size,relevance\ndfm,dfm@"));
}

#[test]
fn export_round_trip() {
    let dir = TempDir::new().unwrap();
    for (src, to) in [("e1.xes", "csv"), ("e2.csv", "xes"), ("e1.csv", "xes")] {
        let out = dir.path().join(format!("out.{to}"));
        ok(&entrel([
            "export-log",
            &f(src),
            "--to",
            to,
            "--out",
            out.to_str().unwrap(),
        ]));
        let a = read_log(&fixture(src), &IngestConfig::default()).unwrap();
        let b = read_log(&out, &IngestConfig::default()).unwrap();
        assert_eq!(a, b);
    }
    assert_eq!(
        entrel(["export-log", &f("e1.xes"), "--to", "parquet"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn outputs_are_deterministic() {
    let runs = [
        vec![
            "sweep".to_owned(),
            f("fines_excerpt.xes.gz"),
            "--thresholds".into(),
            "0.2:1:0.2".into(),
        ],
        vec![
            "relevance".to_owned(),
            "--json".into(),
            "--per-variant".into(),
            f("e2.xes"),
            f("a2.json"),
        ],
        vec![
            "discover".to_owned(),
            f("e2.csv"),
            "--format".into(),
            "sdfa".into(),
        ],
        vec![
            "export-log".to_owned(),
            f("e2.xes"),
            "--to".into(),
            "xes".into(),
        ],
    ];
    for args in runs {
        let first = ok(&entrel(&args));
        assert_eq!(ok(&entrel(&args)), first, "{args:?}");
    }
}

#[test]
fn csv_ingest_flags() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "log.csv", "case;act\n1;x\n1;y\n2;y\n");
    let s = json(&entrel([
        "stats",
        "--json",
        "--delimiter",
        ";",
        "--case-column",
        "case",
        "--activity-column",
        "act",
        "--no-timestamp",
        &p,
    ]));
    assert_eq!(s["traces"], 2);
    assert_eq!(s["events"], 3);
    let out = entrel([
        "stats",
        "--delimiter",
        ";",
        "--case-column",
        "case",
        "--activity-column",
        "act",
        &p,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("timestamp"));
}
