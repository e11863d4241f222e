use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const EXAMPLE_2X3: &str = r#"{"rows":2,"cols":3,"entries":[[1,2,1],[6,18,12]]}"#;
const J2: &str = r#"{"rows":2,"cols":2,"entries":[[1,1],[1,1]]}"#;
const PATTERN: &str = "? x ? x\n? ? x x\nx x ? ?\nx ? x ?\n";
const CYCLE_MASK: &str = "0101\n0011\n1100\n1010\n";
const CYCLE: &str = "[[1,2],[1,4],[2,4],[2,3],[4,3],[4,1],[3,1],[3,2]]";
const GRAPH: &str = "5\n1 2 3 4 5\n1 3\n1 4\n";

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Self(tempfile::tempdir().unwrap())
    }

    fn path(&self) -> &Path {
        self.0.path()
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_totpos")).args(args).output().unwrap();
    let report: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    let code = out.status.code().unwrap();
    assert_eq!(report["exit_code"], code, "{report}");
    validate(&report);
    (code, report)
}

fn validate(report: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{report:#}");
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_classifies_with_exit_codes() {
    let dir = Scratch::new();
    let tp = dir.file("a.json", EXAMPLE_2X3);
    let (code, r) = run(&["check", "--class", "tp", s(&tp)]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("member")));

    let j = dir.file("j.json", J2);
    let (code, r) = run(&["check", "--class", "tp", s(&j)]);
    assert_eq!(code, 1);
    assert_eq!(r["witness"]["value"], "0");
    assert_eq!(r["witness"]["rows"], serde_json::json!([1, 2]));

    let (code, _) = run(&["check", "--class", "tn", s(&j)]);
    assert_eq!(code, 0);
    let (code, _) = run(&["check", "--class", "tpk:1", s(&j)]);
    assert_eq!(code, 0);
}

#[test]
fn errors_exit_two_with_codes() {
    let dir = Scratch::new();
    let bad = dir.file("bad.json", r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#);
    let (code, r) = run(&["check", "--class", "tp", s(&bad)]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["code"], "invalid_input");

    let (code, r) = run(&["check", "--class", "tp", "/nonexistent/matrix.json"]);
    assert_eq!((code, r["verdict"].as_str()), (2, Some("error")));

    let block = dir.file("block.txt", "11\n11\n");
    let (code, r) = run(&["tns", "fill", "--b", "1", s(&block)]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["code"], "precondition");

    let (code, r) = run(&["no-such-command"]);
    assert_eq!((code, r["command"].as_str()), (2, Some("usage")));
}

#[test]
fn pattern_obstruct_reports_obstructed() {
    let dir = Scratch::new();
    let p = dir.file("p.txt", PATTERN);
    let (code, r) = run(&["pattern", "obstruct", s(&p)]);
    assert_eq!((code, r["verdict"].as_str()), (0, Some("Obstructed")));
    assert_eq!(r["certificate"]["kind"], "farkas");

    let (_, r) = run(&["pattern", "obstruct", "--single-removals", s(&p)]);
    assert_eq!(r["single_removals"].as_array().unwrap().len(), 8);
}

#[test]
fn cycle_commands() {
    let dir = Scratch::new();
    let c = dir.file("c.json", CYCLE);
    let (code, r) = run(&["cycles", "positive", s(&c)]);
    assert_eq!(code, 0);
    assert_eq!(r["total"][0][0], 0);
    assert_eq!(r["total"][1][1], 1);
    let (code, _) = run(&["cycles", "eval", s(&c)]);
    assert_eq!(code, 0);

    let m = dir.file("m.txt", CYCLE_MASK);
    let (code, r) = run(&["cycles", "feasible", s(&m)]);
    assert_eq!((code, r["positive_collection_exists"].as_bool()), (1, Some(true)));
    assert_eq!(r["certificate_verified"], true);

    let ident = dir.file("i.txt", "100\n010\n001\n");
    let out = dir.path().join("e.json");
    let (code, _) = run(&["--out", s(&out), "cycles", "feasible", s(&ident)]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(out).unwrap().contains("entries"));

    let (code, r) = run(&["bruhat", "cycle", s(&c)]);
    assert_eq!(code, 0);
    assert_eq!(r["sides_agree"], true);
}

#[test]
fn bruhat_commands() {
    let (code, _) = run(&["bruhat", "perm", "1324", "3412"]);
    assert_eq!(code, 0);
    let (code, _) = run(&["bruhat", "perm", "3412", "1324"]);
    assert_eq!(code, 1);
    let dir = Scratch::new();
    let a = dir.file("a.txt", "100\n010\n001\n");
    let b = dir.file("b.txt", "001\n010\n100\n");
    let (code, _) = run(&["bruhat", "ars", s(&a), s(&b)]);
    assert_eq!(code, 0);
    let (code, _) = run(&["bruhat", "ars", s(&b), s(&a)]);
    assert_eq!(code, 1);
}

#[test]
fn matrix_commands() {
    let dir = Scratch::new();
    let a = dir.file("a.json", EXAMPLE_2X3);
    let (code, r) = run(&["config", "--value", "1", s(&a)]);
    assert_eq!((code, r["multiplicity"].as_u64()), (0, Some(2)));
    assert_eq!(r["configuration"], serde_json::json!(["101", "000"]));
    let (code, _) = run(&["config", "--value", "7/2", s(&a)]);
    assert_eq!(code, 1);
    let (code, r) = run(&["config", "--rank", "1", "--largest", s(&a)]);
    assert_eq!((code, r["value"].as_str()), (0, Some("18")));
    let (code, r) = run(&["audit", "--k", "2", s(&a)]);
    assert_eq!((code, r["error"]["code"].as_str()), (2, Some("invalid_input")));
    let sq = dir.file("sq.json", r#"{"rows":2,"cols":2,"entries":[[1,2],[3,7]]}"#);
    let (code, r) = run(&["audit", "--k", "1", "--largest", s(&sq)]);
    assert_eq!((code, r["total"].as_u64()), (0, Some(1)));
    let (code, r) = run(&["compound", "--k", "2", s(&a)]);
    assert_eq!(code, 0);
    assert_eq!(r["compound"]["entries"], serde_json::json!([[6, 6, 6]]));
}

#[test]
fn geometry_commands() {
    let dir = Scratch::new();
    let grid = dir.path().join("grid.json");
    let (code, r) = run(&["--out", s(&grid), "geom", "grid", "--k", "2"]);
    assert_eq!((code, r["incidences"].as_u64()), (0, Some(16)));
    let norm = dir.path().join("norm.json");
    let (code, r) = run(&["--out", s(&norm), "geom", "normalize", "--seed", "3", s(&grid)]);
    assert_eq!((code, r["incidences"].as_u64()), (0, Some(16)));
    let (code, r) = run(&["geom", "to-matrix", "--base", "2", "--cap", "64", s(&norm)]);
    assert_eq!(code, 0);
    assert_eq!(r["is_tp"], true);
    assert_eq!(r["multiplicity_of_one"], 16);
    let (code, r) = run(&["geom", "stats", s(&norm)]);
    assert_eq!((code, r["incident"].as_u64()), (0, Some(16)));
}

#[test]
fn realize_and_fill() {
    let dir = Scratch::new();
    let g = dir.file("g.txt", GRAPH);
    let (code, r) = run(&["realize", s(&g)]);
    assert_eq!(code, 0);
    assert_eq!(r["alpha"], "6");
    assert!(r["edges"].as_array().unwrap().iter().all(|e| e["in_alpha_set"] == true));
    assert_eq!(r["forbidden_quadruples"], 0);

    let m = dir.file("m.txt", CYCLE_MASK);
    let (code, r) = run(&["tns", "fill", "--b", "2", "--seed", "9", s(&m)]);
    assert_eq!(code, 0);
    assert_eq!(r["matrix"]["entries"][0][1], 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let dir = Scratch::new();
    let m = dir.file("m.txt", CYCLE_MASK);
    let g = dir.file("g.txt", GRAPH);
    for args in [
        vec!["tns", "fill", "--b", "1", "--seed", "4", s(&m)],
        vec!["geom", "normalize", "--seed", "7", "--budget", "8", "PLACEHOLDER"],
        vec!["realize", s(&g)],
        vec!["cycles", "feasible", s(&m)],
    ] {
        let grid = dir.path().join("grid.json");
        run(&["--out", s(&grid), "geom", "grid", "--k", "1"]);
        let args: Vec<&str> = args.iter().map(|a| if *a == "PLACEHOLDER" { s(&grid) } else { a }).collect();
        let (_, mut first) = run(&args);
        let (_, mut second) = run(&args);
        first.as_object_mut().unwrap().remove("timing");
        second.as_object_mut().unwrap().remove("timing");
        assert_eq!(first.to_string(), second.to_string(), "{args:?}");
    }
}
