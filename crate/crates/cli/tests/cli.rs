use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use agraph::graph::{is_isomorphic, Graph};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn agraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn c5_abelianization_report() {
    let out = agraph(&["a1", &f("c5.json"), "--base", "0", "--abelianize"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "free_rank=1 torsion=[]");
}

#[test]
fn cone_gives_a_pentagon() {
    let out = agraph(&["gamma-q", &f("cone_c5.txt"), "-q", "1", "--mode", "maximal"]);
    assert_eq!(out.status.code(), Some(0));
    let g = Graph::from_json(&stdout(&out)).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(5)));
}

#[test]
fn emitted_graphs_round_trip() {
    let product = agraph(&["product", &f("k2.json"), &f("p3.json")]);
    let gamma = agraph(&["gamma-q", &f("ring5.txt"), "-q", "1"]);
    let json_product = agraph(&["--json", "product", &f("k2.json"), &f("p3.json")]);
    for out in [product, gamma, json_product] {
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let g = Graph::from_json(&text).unwrap();
        assert_eq!(g.to_json().trim(), text.trim());
    }
}

#[test]
fn exit_codes() {
    let c5 = f("c5.json");
    let code = |args: &[&str]| agraph(args).status.code();
    assert_eq!(code(&["a1", &c5, "--loop", "0,1,0", "--loop", "0"]), Some(0));
    assert_eq!(code(&["a1", &c5, "--loop", "0,1,2,3,4,0", "--loop", "0"]), Some(10));
    assert_eq!(code(&["homotopy", &c5, "--loop", "0,1,2,3,4,0", "--loop", "0", "--box", "6", "--max-layers", "3"]), Some(11));
    assert_eq!(code(&["a1", &c5, "--loop", "0,2,0"]), Some(1));
    assert_eq!(code(&["fvec", "does-not-exist.json"]), Some(1));
}

#[test]
fn malformed_files_report_positions() {
    let dir = scratch("malformed");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"vertices\": [\"a\",\n  \"edges\": []\n}").unwrap();
    let out = agraph(&["fvec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");

    let json = agraph(&["--json", "fvec", bad.to_str().unwrap()]);
    assert_eq!(json.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["status"], "error");
}

#[test]
fn degenerate_witness_verifies() {
    let (w, h) = (f("witness_f.json"), f("witness_h.json"));
    assert_eq!(agraph(&["verify-cert", &w, &w, &h]).status.code(), Some(0));
    assert_eq!(agraph(&["verify-cert", &w, &w, &h, "--graph", &f("c4.json")]).status.code(), Some(0));
}

#[test]
fn found_certificates_verify() {
    let dir = scratch("certificate");
    let c4 = f("c4.json");
    let d = dir.to_str().unwrap();
    let out = agraph(&["homotopy", &c4, "--loop", "0,1,2,3,0", "--loop", "0", "--box", "5", "--out-dir", d]);
    assert_eq!(out.status.code(), Some(0));
    let file = |n: &str| dir.join(n).display().to_string();
    let check = agraph(&["verify-cert", &file("f.json"), &file("g.json"), &file("h.json"), "--graph", &c4]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));

    // swapping the ends breaks the end-slice condition
    let swapped = agraph(&["verify-cert", &file("g.json"), &file("f.json"), &file("h.json"), "--graph", &c4]);
    assert_eq!(swapped.status.code(), Some(11));
}

#[test]
fn alpha_emits_a_grid() {
    let out = agraph(&["alpha", &f("loops_c4.json"), "--graph", &f("c4.json")]);
    assert_eq!(out.status.code(), Some(0));
    let grid = agraph::cubical::GridMapFile::from_json(&stdout(&out)).unwrap();
    let c4 = Graph::from_json(&std::fs::read_to_string(fixture("c4.json")).unwrap()).unwrap();
    let g = grid.to_grid(Some(&c4)).unwrap();
    assert_eq!(g.dim(), 2);
    assert!(g.is_valid(&c4));
    assert_eq!(g.value(&[2, 2]), 1);
}

#[test]
fn loop_graph_counts() {
    let out = agraph(&["--json", "loop-graph", &f("c5.json"), "--max-len", "4", "--components"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 19);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    let kept = agraph(&["--json", "loop-graph", &f("c5.json"), "--max-len", "4", "--no-collapse"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&kept)).unwrap();
    assert!(v["graph"]["vertices"].as_array().unwrap().len() > 19);
}

#[test]
fn runs_are_byte_identical() {
    let (c4, c5) = (f("c4.json"), f("c5.json"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["product", &c4, &c5],
        vec!["a1", &c5],
        vec!["--json", "a1", &c4, "--presentation"],
        vec!["fvec", &c4, "--max-dim", "3"],
        vec!["--json", "loop-graph", &c5, "--max-len", "5", "--components"],
        vec!["--json", "homotopy", &c4, "--loop", "0,1,2,3,0", "--loop", "0", "--box", "5"],
        vec!["selfcheck", "--seed", "3", "--cases", "10"],
    ];
    for args in runs {
        let a = agraph(&args);
        let b = agraph(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn selfcheck_passes() {
    let out = agraph(&["selfcheck", "--seed", "11", "--cases", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
