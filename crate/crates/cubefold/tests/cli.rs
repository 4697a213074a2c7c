use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cubefold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubefold"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("CUBEFOLD_NO_TIMING", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn ring_does_not_fold() {
    let o = cubefold(&["check", "corpus/3x3_ring.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("does_not_fold (THM_RECT_SQHOLE)"), "{text}");
}

#[test]
fn cross_is_unknown_with_witness() {
    let o = cubefold(&["check", "corpus/cross_net.json", "--witness", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["decision"], "unknown");
    assert_eq!(v["search"]["covering"], true);
    let faces: std::collections::BTreeSet<u64> =
        v["witness"]["faces"].as_array().unwrap().iter().map(|f| f["face"].as_u64().unwrap()).collect();
    assert_eq!(faces.len(), 6);
}

#[test]
fn boundary_slit_is_an_input_error() {
    let o = cubefold(&["check", "tests/fixtures/bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not shared by two squares"));
    let o = cubefold(&["check", "no/such/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn state_limit_without_verdict_exits_three() {
    let o = cubefold(&["check", "corpus/cross_net.json", "--max-states", "3", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["decision"], "unknown");
    assert_eq!(v["provenance"], "SEARCH_INCONCLUSIVE");
    assert_eq!(v["search"]["truncated"], true);
}

#[test]
fn oracle_agreement_is_reported() {
    let o = cubefold(&["check", "corpus/cross_net.json", "--oracle", "--json"]);
    assert_eq!(json(&o)["oracle"]["status"], "agrees");
    let o = cubefold(&["check", "corpus/rect_sqhole_5x5.txt", "--oracle", "--json"]);
    assert_eq!(json(&o)["oracle"]["status"], "skipped");
}

#[test]
fn svg_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.svg");
    let o = cubefold(&["check", "corpus/domino_hole_4x4.json", "--svg", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<text"), "a Folds verdict carries a witness");
    let bare = dir.path().join("b.svg");
    cubefold(&["check", "corpus/rect_3x4.txt", "--svg", bare.to_str().unwrap()]);
    assert!(!fs::read_to_string(&bare).unwrap().contains("<text"));
}

#[test]
fn holes_command() {
    let o = cubefold(&["holes", "corpus/3x3_ring.txt", "--json"]);
    let v = json(&o);
    assert_eq!(v["holes"].as_array().unwrap().len(), 1);
    assert_eq!(v["holes"][0]["class"], "UnitSquare");

    let o = cubefold(&["holes", "corpus/two_vslits_6x7.json", "--json"]);
    let v = json(&o);
    assert_eq!(v["holes"].as_array().unwrap().len(), 2);
    for h in v["holes"].as_array().unwrap() {
        assert_eq!(h["class"], "StraightSlit2");
        assert_eq!(h["orientation"], "vertical");
    }
    assert_eq!(v["gaps"][0]["rows_between"], 1);
    assert_eq!(v["gaps"][0]["cols_between"], 2);

    let o = cubefold(&["holes", "corpus/rect_3x4.txt"]);
    assert!(stdout(&o).contains("0 hole(s)"));
}

#[test]
fn corpus_edge_cases() {
    let empty = tempfile::tempdir().unwrap();
    let o = cubefold(&["corpus", empty.path().to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["rows"].as_array().unwrap().is_empty());

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a_ring.txt"), "###\n#.#\n###\n").unwrap();
    fs::write(dir.path().join("b_broken.json"), "{\"squares\": [[0,0]").unwrap();
    let o = cubefold(&["corpus", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["rows"][0]["file"], "a_ring.txt");
    assert_eq!(v["rows"][1]["decision"], "input_error");
}

#[test]
fn bundled_corpus_has_no_contradictions() {
    let o = cubefold(&["corpus", "corpus", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["summary"]["contradictions"], 0);
    assert_eq!(v["summary"]["input_error"], 0);
    let files: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["file"].as_str().unwrap()).collect();
    let mut sorted = files.clone();
    sorted.sort();
    assert_eq!(files, sorted);
}

fn golden(args: &[&str], file: &str) {
    let o = cubefold(args);
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(file);
    let expected = fs::read_to_string(path).unwrap();
    assert_eq!(stdout(&o), expected);
}

#[test]
fn golden_reports() {
    golden(&["check", "corpus/3x3_ring.txt", "--json", "--witness"], "3x3_ring.golden.json");
    golden(&["check", "corpus/cross_net.json", "--json", "--witness"], "cross_net.golden.json");
}
