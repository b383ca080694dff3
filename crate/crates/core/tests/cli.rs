use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use cliquecover::cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cliquecover").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn ecc_json_envelope() {
    let g = fixture("g_isr.edges");
    let v = json(&["ecc", "--k", "5", &g, "--json"]);
    assert_eq!(v["answer"], "YES");
    assert_eq!(v["cover"].as_array().unwrap().len(), 5);
    for key in ["nodes", "depth", "max_branching", "time_ms"] {
        assert!(v["stats"][key].is_number(), "{key}");
    }
    for key in ["rules_applied", "kernel_n", "kernel_m"] {
        assert!(v["reductions"][key].is_number(), "{key}");
    }
    assert_eq!(json(&["ecc", "--k", "4", &g, "--json"])["answer"], "NO");
}

#[test]
fn every_engine_on_ecc() {
    let g = fixture("g_isr.edges");
    for e in ["f1", "f2", "eccg"] {
        for extra in [None, Some("--no-reduce")] {
            let mut args = vec!["ecc", "--k", "5", g.as_str(), "--engine", e];
            args.extend(extra);
            let (code, out, _) = call(&args);
            assert_eq!(code, 0);
            assert!(out.starts_with("YES\n"), "{e}: {out}");
            assert_eq!(out.lines().count(), 6);
        }
    }
}

#[test]
fn ewcd_exact_gamma() {
    let v = json(&["ewcd", "--k", "3", &fixture("k4w.edges"), &fixture("k4w.weights"), "--json"]);
    assert_eq!(v["answer"], "YES");
    let gamma = v["gamma"].as_array().unwrap();
    assert_eq!(gamma.len(), v["cover"].as_array().unwrap().len());
    let v = json(&["ewcd", "--k", "3", &fixture("k4w.edges"), &fixture("k4w.weights"), "--integer", "--wmax", "101", "--json"]);
    let mut pairs: Vec<(String, String)> = v["cover"]
        .as_array()
        .unwrap()
        .iter()
        .zip(v["gamma"].as_array().unwrap())
        .map(|(c, g)| (c.to_string(), g.as_str().unwrap().to_string()))
        .collect();
    pairs.sort();
    let want = [("[0,1,2,3]", "1"), ("[0,1,2]", "1"), ("[0,1]", "99")];
    assert_eq!(pairs, want.map(|(a, b)| (a.to_string(), b.to_string())));
    assert_eq!(json(&["ewcd", "--k", "2", &fixture("k4w.edges"), &fixture("k4w.weights"), "--json"])["answer"], "NO");
}

#[test]
fn dimacs_no_answer_exits_zero() {
    let (code, out, _) = call(&["ecc", "--k", "0", &fixture("k3.col")]);
    assert_eq!((code, out.as_str()), (0, "NO\n"));
    let (code, out, _) = call(&["ecc", "--k", "1", &fixture("k3.col"), "--stats"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..2], ["YES", "0 1 2"]);
    assert!(lines[2].starts_with("nodes "));
    assert!(lines[3].starts_with("rules_applied "));
}

#[test]
fn other_problems() {
    let g = fixture("g_isr.edges");
    let v = json(&["acc", "--t", "14", &g, "--json"]);
    assert_eq!(v["answer"], "YES");
    assert_eq!(json(&["acc", "--t", "13", &g, "--json"])["answer"], "NO");
    let v = json(&["min-ecc", &g, "--json"]);
    assert_eq!(v["value"], 5);
    let v = json(&["min-assign", &g, "--json"]);
    assert_eq!(v["value"], 14);
    let (code, out, _) = call(&["lrcc", "--k", "3", &fixture("g_lrcc.edges"), "--estar", &fixture("g_lrcc.estar")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES"));
    let dir = tempfile::tempdir().unwrap();
    let pairs = dir.path().join("pairs");
    std::fs::write(&pairs, "0 5\n").unwrap();
    let v = json(&["pmc", "--k", "4", &fixture("g_lrcc.edges"), "--pairs", pairs.to_str().unwrap(), "--json"]);
    assert!(v["answer"] == "YES" || v["answer"] == "NO");
}

#[test]
fn usage_errors_are_nonzero() {
    let g = fixture("g_isr.edges");
    let cases: Vec<Vec<&str>> = vec![
        vec!["ecc", &g],
        vec!["ecc", "--k", "x", &g],
        vec!["ecc", "--k", "2", "/nonexistent/graph.edges"],
        vec!["acc", "--t", "3", &g, "--engine", "eccg"],
        vec!["lrcc", "--k", "3", &g, "--estar", &g, "--engine", "f1"],
        vec!["ecc", "--k", "3", &g, "--seed", "4"],
        vec!["ewcd", "--k", "3", &g, &g, "--integer"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let (code, _, err) = call(&args);
        assert_ne!(code, 0, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("g_isr.edges");
    let (_, out, _) = call(&["ecc", "--k", "5", &g, "--json"]);
    let sol = dir.path().join("sol.json");
    std::fs::write(&sol, &out).unwrap();
    let sol = sol.to_str().unwrap();
    let (code, out, _) = call(&["verify", &g, "--problem", "ecc", "--solution", sol]);
    assert_eq!((code, out.as_str()), (0, "VALID\n"));
    let (code, out, _) = call(&["verify", &g, "--problem", "ecc", "--solution", sol, "--k", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("INVALID: "), "{out}");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"cover": [[0, 1]]}"#).unwrap();
    let v = json(&["verify", &g, "--problem", "ecc", "--solution", bad.to_str().unwrap(), "--json"]);
    assert_eq!(v["valid"], false);
    assert!(v["violation"].is_string());

    let (e, w) = (fixture("k4w.edges"), fixture("k4w.weights"));
    let (_, out, _) = call(&["ewcd", "--k", "3", &e, &w, "--json"]);
    let sol = dir.path().join("ewcd.json");
    std::fs::write(&sol, &out).unwrap();
    let v = json(&["verify", &e, &w, "--problem", "ewcd", "--solution", sol.to_str().unwrap(), "--json"]);
    assert_eq!(v["valid"], true);
}

#[test]
fn bench_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bench.cfg");
    std::fs::write(&cfg, "gnp = 10:0.4\nseeds = 0..3\nengines = eccg, f1, f2\n").unwrap();
    let (code, out, err) = call(&["bench", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().filter(|l| l.starts_with("gnp(")).count(), 9);
    assert!(out.contains("# answers agree: true"));
    let v = json(&["bench", "--config", cfg.to_str().unwrap(), "--json", "--seed", "7"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["rows"][0]["instance"], "gnp(10,0.4)#7");
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_cliquecover");
    let ok = Command::new(exe).args(["ecc", "--k", "0", &fixture("k3.col")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "NO\n");
    let bad = Command::new(exe).args(["ecc", "--k", "1", "missing.edges"]).output().unwrap();
    assert_ne!(bad.status.code(), Some(0));
    let help = Command::new(exe).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
