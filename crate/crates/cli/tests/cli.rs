use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_clawdec"));
    c.env_remove("CLAWDEC_WORKERS");
    c
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("clawdec-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = bin().args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

const OCTAHEDRON: &str = "6 12\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";

#[test]
fn decide_octahedron() {
    let s = Scratch::new("decide");
    let f = s.file("oct.el", OCTAHEDRON);
    let (code, v, _) = run(&["decide", "--k", "3", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "decide");
    assert_eq!(v["outcome"]["decision"], "decomposable");
    assert_eq!(v["outcome"]["stars"].as_array().unwrap().len(), 4);
    assert_eq!(v["outcome"]["verified"], true);
    for star in v["outcome"]["stars"].as_array().unwrap() {
        let c = star["center"].as_u64().unwrap();
        for e in star["edges"].as_array().unwrap() {
            assert!(e[0].as_u64() == Some(c) || e[1].as_u64() == Some(c));
        }
    }
}

#[test]
fn decide_certificate_exit_two() {
    let s = Scratch::new("cert");
    let f = s.file("k4.g6", "C~\n");
    let (code, v, _) = run(&["decide", "--k", "3", &f]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"]["decision"], "not_decomposable");
    assert_eq!(v["outcome"]["certificate"]["kind"], "IndependenceBound");
    assert_eq!(v["outcome"]["certificate"]["required"], 2);
    assert_eq!(v["outcome"]["verified"], true);
}

#[test]
fn errors_exit_one_without_report() {
    let s = Scratch::new("err");
    let bad = s.file("bad.el", "3 2\n0 1\n");
    for args in [
        vec!["decide", "--k", "3", bad.as_str()],
        vec!["decide", "--k", "3", "/nonexistent/file"],
        vec!["decide", "--frobnicate"],
        vec!["survey", "--n", "10"],
        vec!["survey", "--n", "18"],
        vec!["family", "product", "--k", "3", "--kn-cycles", "1"],
        vec!["verify-known", "--name", "fig2-planar-18"],
        vec!["verify-known", "--name", "no-such-graph"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn orient_modes() {
    let s = Scratch::new("orient");
    let g = s.file("claw.el", "4 3\n0 1\n0 2\n0 3\n");
    let ok = s.file("ok.p", "0 1 1 1\n");
    let (code, v, _) = run(&["orient", &g, "--mode", "hakimi", "--p", &ok]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["verified"], true);
    let tight = s.file("tight.p", "0 0 0 1\n");
    let (code, v, _) = run(&["orient", &g, "--mode", "hakimi", "--p", &tight]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"]["result"], "violated");
    assert_eq!(v["outcome"]["verified"], true);
    let (code, v, _) = run(&["orient", &g, "--mode", "modk", "--k", "3", "--p", &ok]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["out_degrees"], serde_json::json!([0, 1, 1, 1]));
    let none = s.file("none.p", "0 2 1 0\n");
    let (code, _, _) = run(&["orient", &g, "--mode", "modk", "--k", "3", "--p", &none]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["orient", &g, "--mode", "modk", "--p", &ok]);
    assert_eq!(code, 1);
    assert!(err.contains("--k"));
}

#[test]
fn connectivity_essential() {
    let s = Scratch::new("conn");
    let f = s.file("oct.el", OCTAHEDRON);
    let (code, v, _) = run(&["connectivity", &f, "--essential", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["edge_connectivity"], 4);
    assert_eq!(v["outcome"]["vertex_connectivity"], 4);
    assert_eq!(v["outcome"]["essential"]["passed"], true);
    let c6 = s.file("c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let (code, v, _) = run(&["connectivity", &c6, "--essential", "3", "--workers", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"]["essential"]["cut"]["size"], 2);
}

#[test]
fn enumerate_and_workers() {
    let s = Scratch::new("enum");
    let out = s.0.join("g.txt");
    let (code, a, _) = run(&["enumerate", "--n", "9", "--d", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(a["outcome"]["count"], 16);
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 16);
    let b = bin().args(["enumerate", "--n", "9", "--d", "4"]).env("CLAWDEC_WORKERS", "3").output().unwrap();
    let b: Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(b["outcome"]["workers"], 3);
    assert_eq!(a["outcome"]["checksum"], b["outcome"]["checksum"]);
}

#[test]
fn survey_small_with_checkpoint() {
    let s = Scratch::new("survey");
    let ck = s.0.join("ck.txt");
    let w = s.0.join("w.txt");
    let args = [
        "survey",
        "--n",
        "9",
        "--checkpoint",
        ck.to_str().unwrap(),
        "--witnesses",
        w.to_str().unwrap(),
    ];
    let (code, a, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a["outcome"]["total_generated"], 16);
    let (_, b, _) = run(&args);
    assert_eq!(a["outcome"]["checksum"], b["outcome"]["checksum"]);
    let witnesses = std::fs::read_to_string(&w).unwrap();
    assert_eq!(witnesses.lines().count() as u64, a["outcome"]["non_decomposable"].as_u64().unwrap());
}

#[test]
fn family_product() {
    let (code, v, _) = run(&["family", "product", "--k", "4", "--kn-cycles", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["order"], 20);
    assert_eq!(v["outcome"]["size"], 60);
    assert_eq!(v["outcome"]["report"]["certificate"]["kind"], "IndependenceBound");
}

#[test]
fn verify_known_order_twelve() {
    let (code, v, _) = run(&["verify-known", "--name", "fig1-12-2"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["order"], 12);
    assert!(v["outcome"]["report"]["claims"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn convert_round_trips() {
    let s = Scratch::new("convert");
    let f = s.file("oct.el", OCTAHEDRON);
    let g6 = bin().args(["convert", &f, "--to", "graph6"]).output().unwrap();
    assert_eq!(g6.status.code(), Some(0));
    let g6_path = s.file("oct.g6", std::str::from_utf8(&g6.stdout).unwrap());
    let el = bin().args(["convert", &g6_path, "--to", "edgelist"]).output().unwrap();
    let back = std::str::from_utf8(&el.stdout).unwrap();
    assert_eq!(back.lines().next(), Some("6 12"));
    let again = bin().args(["convert", &s.file("back.el", back), "--to", "graph6"]).output().unwrap();
    assert_eq!(again.stdout, g6.stdout);
    let dot = bin().args(["convert", &f, "--to", "dot"]).output().unwrap();
    assert!(std::str::from_utf8(&dot.stdout).unwrap().starts_with("graph oct {"));
}

#[test]
fn reports_are_stable() {
    let s = Scratch::new("stable");
    let f = s.file("oct.el", OCTAHEDRON);
    let strip = |mut v: Value| {
        v["wall_time_ms"] = Value::Null;
        v
    };
    let (c1, a, _) = run(&["decide", "--k", "3", &f]);
    let (c2, b, _) = run(&["decide", "--k", "3", &f]);
    assert_eq!((c1, strip(a)), (c2, strip(b)));
}
