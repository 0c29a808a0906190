use std::path::PathBuf;
use std::process::{Command, Output};

use lrchord::io::parse_complex;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn lrchord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrchord")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn check_exit_codes() {
    let ex216 = lrchord(&["check", &data("ex216.ideal")]);
    assert_eq!(ex216.status.code(), Some(1));
    assert!(stdout(&ex216).contains("result: not linear"));

    let c4 = lrchord(&["check", &data("c4-edge.ideal")]);
    assert_eq!(c4.status.code(), Some(0));
    assert!(stdout(&c4).contains("result: linear"));

    let c5 = lrchord(&["check", &data("c5-edge.ideal"), "--mode", "exact"]);
    assert_eq!(c5.status.code(), Some(1));
}

#[test]
fn capped_search_is_inconclusive() {
    let o = lrchord(&["check", &data("c5-edge.ideal"), "--mode", "exact", "--kernel-cap", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("result: inconclusive"));
}

#[test]
fn malformed_input_exits_64() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "x0*x1\nx2**x3\n").unwrap();
    let o = lrchord(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let mixed = dir.path().join("mixed.ideal");
    std::fs::write(&mixed, "x0*x1\nx1*x2*x3\n").unwrap();
    assert_eq!(lrchord(&["check", mixed.to_str().unwrap()]).status.code(), Some(64));

    assert_eq!(lrchord(&["check", "/nonexistent/file.ideal"]).status.code(), Some(64));
    assert_eq!(lrchord(&["repro", "unknown"]).status.code(), Some(64));
}

#[test]
fn check_json_embeds_config() {
    let o = lrchord(&["check", &data("ex216.ideal"), "--json", "--seed", "7"]);
    let v = json(&o);
    assert_eq!(v["config"]["command"], "check");
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["mode"], "boundary");
    assert_eq!(v["report"]["consistent"], true);
    assert_eq!(v["report"]["characteristic"], 2);
}

#[test]
fn repro_claims_hold() {
    for name in ["ex216", "rp2", "fig5", "octa"] {
        let o = lrchord(&["repro", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn homology_of_tetrahedron() {
    let o = lrchord(&["homology", &data("tetra.cplx")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("H~_2 = 1"));
    assert!(text.contains("H~_1 = 0"));
}

#[test]
fn cycles_of_chorded_octahedron() {
    let o = lrchord(&["cycles", &data("octa-chorded.cplx"), "--dim", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["report"]["cycles"].as_array().unwrap().len(), 3);
    let capped = lrchord(&["cycles", &data("octa-chorded.cplx"), "--dim", "2", "--kernel-cap", "1"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn closure_output_is_a_complex_file() {
    let o = lrchord(&["closure", &data("fig5.cplx"), "--dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let got = parse_complex(&stdout(&o)).unwrap();
    let expected = parse_complex(&std::fs::read_to_string(data("fig5-closure.cplx")).unwrap()).unwrap();
    assert_eq!(got, expected);

    let skeleton = lrchord(&["closure", &data("fig5-closure.cplx"), "--dim", "2", "--op", "skeleton"]);
    let fig5 = parse_complex(&std::fs::read_to_string(data("fig5.cplx")).unwrap()).unwrap();
    assert_eq!(parse_complex(&stdout(&skeleton)).unwrap(), fig5);

    let not_pure = lrchord(&["closure", &data("fig5-closure.cplx"), "--dim", "2"]);
    assert_eq!(not_pure.status.code(), Some(64));
}

#[test]
fn betti_table_layout() {
    let o = lrchord(&["betti", &data("ex216.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("       0 1\ntotal: 2 1\n    3: 2 .\n    4: . .\n    5: . 1\n"));
}

#[test]
fn crosschecks() {
    let graphs = lrchord(&["crosscheck", "graphs", "--n-max", "5", "--json"]);
    assert_eq!(graphs.status.code(), Some(0));
    let v = json(&graphs);
    assert_eq!(v["report"]["checked"], 1024);
    assert_eq!(v["report"]["agreements"], 1024);

    let infeasible = lrchord(&["crosscheck", "graphs", "--n-max", "30"]);
    assert_eq!(infeasible.status.code(), Some(64));

    let ideals = lrchord(&["crosscheck", "ideals", "--n-max", "6", "--dims", "1,2", "--sample", "40"]);
    assert_eq!(ideals.status.code(), Some(0));
    assert!(stdout(&ideals).contains("40/40 conclusive agree"));
}

#[test]
fn json_is_deterministic() {
    let args = ["crosscheck", "ideals", "--n-max", "6", "--sample", "30", "--seed", "9", "--json"];
    let a = lrchord(&args);
    let b = lrchord(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut single: Vec<&str> = args.to_vec();
    single.extend(["--threads", "1"]);
    let c = lrchord(&single);
    assert_eq!(json(&a)["report"], json(&c)["report"]);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = lrchord(&["check", &data("c4-edge.ideal"), "--json", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["config"]["inputs"][0], data("c4-edge.ideal"));
}
