use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use nestlat::oracle::{self, ClosureKind};
use nestlat::{BlockShape, PrimeField};
use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    out: Value,
}

fn nestlat(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_nestlat")).args(args).output().unwrap();
    let code = output.status.code().unwrap();
    let out = serde_json::from_slice(&output.stdout).unwrap_or(Value::Null);
    Run { code, out }
}

fn write(dir: &TempDir, name: &str, doc: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, doc.to_string()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn echelon_left_is_identity() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", &json!({"ring": "Q", "rows": 2, "cols": 2, "entries": [[0, 2], [1, 1]]}));
    let r = nestlat(&["echelon", "--side", "left", "--input", s(&input)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["rank"], json!(2));
    assert_eq!(r.out["pivots"], json!([1, 2]));
    assert_eq!(r.out["form"]["entries"], json!([["1", "0"], ["0", "1"]]));
}

#[test]
fn emitted_matrices_round_trip() {
    let dir = TempDir::new().unwrap();
    let docs = [
        json!({"ring": "Q", "rows": 2, "cols": 3, "entries": [["1/2", "-3", "0"], ["2", "4/6", "1"]]}),
        json!({"ring": "GF(7)", "rows": 2, "cols": 2, "entries": [[3, 5], [6, 3]]}),
        json!({"ring": "H(Q)", "rows": 1, "cols": 2, "entries": [[["0", "1", "0", "0"], ["0", "0", "1", "0"]]]}),
    ];
    for (i, doc) in docs.iter().enumerate() {
        for side in ["left", "right"] {
            let input = write(&dir, &format!("m{i}.json"), doc);
            let first = nestlat(&["echelon", "--side", side, "--input", s(&input)]);
            assert_eq!(first.code, 0, "{doc}");
            let form = write(&dir, &format!("f{i}.json"), &first.out["form"]);
            let second = nestlat(&["echelon", "--side", side, "--input", s(&form)]);
            assert_eq!(second.code, 0);
            assert_eq!(second.out["form"], first.out["form"]);
            assert_eq!(second.out["rank"], first.out["rank"]);
        }
    }
}

#[test]
fn quaternion_row_reduces_to_minus_k() {
    let dir = TempDir::new().unwrap();
    let doc = json!({"ring": "H(Q)", "rows": 1, "cols": 2, "entries": [[["0", "1", "0", "0"], ["0", "0", "1", "0"]]]});
    let input = write(&dir, "h.json", &doc);
    let r = nestlat(&["echelon", "--side", "left", "--input", s(&input)]);
    assert_eq!(r.out["form"]["entries"], json!([[["1", "0", "0", "0"], ["0", "0", "0", "-1"]]]));
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.json", &json!({"ring": "Q", "rows": 2, "cols": 2, "generators": [[["2/4", 1], [0, 0]]]}));
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nestlat"))
            .args(["phi", "--input", s(&input), "--ambient", "2x2", "--side", "left"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "a.json", &json!({"ring": "GF(2)", "rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}));
    assert_eq!(nestlat(&["echelon", "--input", s(&good)]).code, 2);
    assert_eq!(nestlat(&["echelon", "--side", "up", "--input", s(&good)]).code, 2);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let r = nestlat(&["echelon", "--side", "left", "--input", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.out["error"].is_string());

    let outside = write(&dir, "o.json", &json!({"ring": "GF(2)", "rows": 2, "cols": 2, "entries": [[0, 0], [1, 0]]}));
    let r = nestlat(&["nest-phi", "--shape", "M=(1,1);N=(1,1)", "--input", s(&outside), "--side", "left"]);
    assert_eq!(r.code, 1);
    assert!(r.out["error"].is_string());

    let r = nestlat(&["enumerate", "--ring", "Q", "--shape", "M=(1,1);N=(1,1)", "--kind", "left"]);
    assert_eq!(r.code, 1);
}

#[test]
fn nest_phi_and_bimodule_commands() {
    let dir = TempDir::new().unwrap();
    let shape = "M=(1,1);N=(1,1)";
    let e12 = write(&dir, "e12.json", &json!({"ring": "GF(3)", "rows": 2, "cols": 2, "entries": [[0, 1], [0, 0]]}));
    let r = nestlat(&["nest-phi", "--shape", shape, "--input", s(&e12), "--side", "left"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["principal"], json!(true));
    assert_eq!(r.out["tuple"]["ranks"], json!([1, 0]));

    let r = nestlat(&["classify-bimodule", "--shape", shape, "--input", s(&e12)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["descriptor"], json!({"i": 1, "js": [2]}));

    let id = write(&dir, "id.json", &json!({"ring": "GF(3)", "rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}));
    let r = nestlat(&["product", "--shape", shape, "--side", "left", "--left", s(&e12), "--right", s(&id)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["agree"], json!(false));
}

fn parse_dot(text: &str) -> (Vec<String>, Vec<(usize, usize)>) {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some((a, b)) = line.strip_suffix(';').and_then(|l| l.split_once(" -> ")) {
            edges.push((a[1..].parse().unwrap(), b[1..].parse().unwrap()));
        } else if let Some(rest) = line.split_once("[label=\"") {
            labels.push(rest.1.trim_end_matches("\"];").to_string());
        }
    }
    (labels, edges)
}

fn enumerate_dot(ring: &str, shape: &str, kind: &str) {
    let dir = TempDir::new().unwrap();
    let dot = dir.path().join("h.dot");
    let r = nestlat(&["enumerate", "--ring", ring, "--shape", shape, "--kind", kind, "--dot", s(&dot)]);
    assert_eq!(r.code, 0);
    let (labels, edges) = parse_dot(&std::fs::read_to_string(&dot).unwrap());
    let listed: Vec<String> = r.out["modules"].as_array().unwrap().iter().map(|m| m["hash"].as_str().unwrap().to_string()).collect();
    assert_eq!(labels, listed);
    assert_eq!(r.out["count"], json!(labels.len()));

    let p: u64 = ring.trim_start_matches("GF(").trim_end_matches(')').parse().unwrap();
    let kind: ClosureKind = kind.parse().unwrap();
    let modules = oracle::enumerate_submodules(&PrimeField::new(p).unwrap(), &shape.parse::<BlockShape>().unwrap(), kind).unwrap();
    assert_eq!(modules.len(), labels.len());
    let n = modules.len();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    assert_eq!(index.len(), n, "labels are distinct");

    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in &edges {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    for &(a, b) in &edges {
        assert!(!reach[b][a], "cycle through {a} -> {b}");
    }
    for i in 0..n {
        for j in 0..n {
            assert_eq!(reach[i][j], modules[i].is_subset(&modules[j]), "({i}, {j})");
        }
    }
}

#[test]
fn hasse_diagrams_match_inclusion() {
    enumerate_dot("GF(2)", "M=(1,1);N=(1,1)", "left");
    enumerate_dot("GF(3)", "M=(1,1);N=(1,1)", "bimodule");
    enumerate_dot("GF(2)", "M=(1,2);N=(1,2)", "right");
    enumerate_dot("GF(2)", "M=(2);N=(2)", "left");
}

#[test]
fn enumerate_count_for_t2() {
    let r = nestlat(&["enumerate", "--ring", "GF(2)", "--shape", "M=(1,1);N=(1,1)", "--kind", "left"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["count"], json!(7));
}
