use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use harris::families::{iterate, Family};
use harris::properties::{is_harris, validate_cycle};
use harris::{emit_graph6, parse_graph6, Graph};
use serde_json::Value;

const ORDER_SEVEN: &str = "F@U^w";

fn harris(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_harris"))
        .args(args)
        .env_remove("HARRIS_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn check_order_seven() {
    let o = harris(&["check"], &format!("{ORDER_SEVEN}\n"));
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["harris"], true);
    assert_eq!(r["degree_sequence"], "6-4-4-4-2-2-2");
    assert_eq!(r["input"], ORDER_SEVEN);
}

#[test]
fn check_c5_carries_cycle() {
    let c5 = emit_graph6(&Graph::cycle(5).unwrap());
    let o = harris(&["check"], &c5);
    let r = &json_lines(&o)[0];
    assert_eq!(r["harris"], false);
    assert_eq!(r["hamiltonian"], true);
    let cycle: Vec<usize> = serde_json::from_value(r["witnesses"]["hamiltonian_cycle"].clone()).unwrap();
    assert!(validate_cycle(&Graph::cycle(5).unwrap(), &cycle));
}

#[test]
fn check_witnesses_replay() {
    let star = emit_graph6(&Graph::star(3).unwrap());
    let o = harris(&["check"], &format!("{star}\n"));
    let r = &json_lines(&o)[0];
    let g = parse_graph6(&star).unwrap();
    let v = r["witnesses"]["odd_vertex"].as_u64().unwrap() as usize;
    assert_eq!(g.degree(v) % 2, 1);
    let s: harris::VertexSet = r["witnesses"]["violating_set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    assert!(harris::properties::replays_violation(&g, s));
}

#[test]
fn check_reports_bad_lines_and_keeps_going() {
    let o = harris(&["check"], "C~\nC\n\nBw\n");
    assert_eq!(o.status.code(), Some(2));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[1]["line"], 2);
    assert!(recs[1]["error"].as_str().unwrap().contains("byte 1"));
    assert_eq!(recs[2]["input"], "Bw");
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn check_strict_stops_at_first_error() {
    let o = harris(&["check", "--strict"], "C~\nC\nBw\n");
    assert_eq!(o.status.code(), Some(2));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["line"], 2);
}

#[test]
fn check_harris_only_and_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    fs::write(&path, format!(">>graph6<<C~\n{ORDER_SEVEN}\nBw\n")).unwrap();
    let o = harris(&["check", "--harris-only", path.to_str().unwrap()], "");
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["input"], ORDER_SEVEN);
}

#[test]
fn check_preserves_order_across_chunks() {
    let inputs: Vec<String> = (3..40)
        .cycle()
        .take(1500)
        .map(|n| emit_graph6(&Graph::cycle(n % 20 + 3).unwrap()))
        .collect();
    let o = harris(&["check"], &inputs.join("\n"));
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), inputs.len());
    for (r, i) in recs.iter().zip(&inputs) {
        assert_eq!(r["input"].as_str().unwrap(), i);
    }
}

#[test]
fn check_enforces_ceiling() {
    let big = emit_graph6(&Graph::cycle(40).unwrap());
    let o = harris(&["check"], &big);
    assert_eq!(o.status.code(), Some(3));
    assert!(json_lines(&o)[0]["error"].as_str().unwrap().contains("ceiling"));
}

#[test]
fn enumerate_order_eight_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = harris(&["enumerate", "8", "--out", out, "--threads", "1"], "");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "3");
    let catalog = fs::read_to_string(dir.path().join("harris-8.g6")).unwrap();
    assert_eq!(catalog.lines().count(), 3);
    for line in catalog.lines() {
        let g = parse_graph6(line).unwrap();
        assert!(is_harris(&g).is_harris);
    }
    let summary: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("harris-8.json")).unwrap()).unwrap();
    assert_eq!(summary["count"], 3);
    let csv = fs::read_to_string(dir.path().join("counts.csv")).unwrap();
    assert_eq!(csv, "order,harris_count\n8,3\n");

    let o = harris(&["enumerate", "7", "--out", out], "");
    assert!(o.status.success());
    let csv = fs::read_to_string(dir.path().join("counts.csv")).unwrap();
    assert_eq!(csv, "order,harris_count\n7,1\n8,3\n");
}

#[test]
fn enumerate_is_thread_independent() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    harris(&["enumerate", "8", "--out", a.path().to_str().unwrap(), "--threads", "1"], "");
    let o = Command::new(env!("CARGO_BIN_EXE_harris"))
        .args(["enumerate", "8", "--out", b.path().to_str().unwrap()])
        .env("HARRIS_THREADS", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(
        fs::read(a.path().join("harris-8.g6")).unwrap(),
        fs::read(b.path().join("harris-8.g6")).unwrap()
    );
}

#[test]
fn enumerate_ceilings_are_usage_errors() {
    let o = harris(&["enumerate", "13"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ceiling of 12"));
    let o = harris(&["enumerate", "11"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--force"));
    let o = harris(&["enumerate", "2"], "");
    assert_eq!(o.status.code(), Some(1));
    let o = harris(&["enumerate"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let out = dir.path().to_str().unwrap();
    let args = ["enumerate", "8", "--out", out, "--threads", "1", "--checkpoint", cp.to_str().unwrap()];
    let mut first = args.to_vec();
    first.extend(["--stop-after-units", "8"]);
    let o = harris(&first, "");
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    assert!(cp.exists());
    assert!(!dir.path().join("harris-8.g6").exists());

    let o = harris(&args, "");
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("resuming"));
    assert_eq!(stdout(&o).trim(), "3");

    let o = harris(&["enumerate", "7", "--checkpoint", cp.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("order 8"));
}

#[test]
fn family_hirotaka_orders() {
    let o = harris(&["family", "hirotaka", "--steps", "2"], "");
    assert!(o.status.success());
    let orders: Vec<usize> = stdout(&o).lines().map(|l| parse_graph6(l).unwrap().n()).collect();
    assert_eq!(orders, vec![7, 9, 11]);
}

#[test]
fn family_verify_matches_library() {
    let o = harris(&["family", "justine", "--n", "3", "--verify", "--json"], "");
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["harris"], true);

    let o = harris(&["family", "shaw", "--steps", "1", "--verify", "--json"], "");
    assert!(o.status.success());
    let recs = json_lines(&o);
    let lib = iterate(Family::Shaw, 1).unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["order"], 13);
    for (r, s) in recs.iter().zip(&lib) {
        let g = parse_graph6(r["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(g, s.graph);
        assert_eq!(r["harris"], is_harris(&s.graph).is_harris);
    }
}

#[test]
fn family_writes_role_maps() {
    let dir = tempfile::tempdir().unwrap();
    let o = harris(&["family", "hirotaka", "--steps", "1", "--out", dir.path().to_str().unwrap()], "");
    assert!(o.status.success());
    let g6 = fs::read_to_string(dir.path().join("hirotaka.g6")).unwrap();
    assert_eq!(g6, stdout(&o));
    let roles: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("hirotaka-1.json")).unwrap()).unwrap();
    assert_eq!(roles["roles"].as_object().unwrap().len(), 9);
    assert_eq!(roles["roles"]["v6"], 8);
}

#[test]
fn family_bad_parameters() {
    assert_eq!(harris(&["family", "justine", "--n", "4"], "").status.code(), Some(1));
    assert_eq!(harris(&["family", "petersen"], "").status.code(), Some(1));
    assert_eq!(harris(&["family", "shaw", "--n", "3"], "").status.code(), Some(1));
    let o = harris(&["family", "hirotaka", "--steps", "12", "--verify"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).is_empty());
}

#[test]
fn transform_graft_order_arithmetic() {
    let o = harris(&["transform", "graft", ORDER_SEVEN, ORDER_SEVEN], "");
    assert!(o.status.success());
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g.n(), 24);
}

#[test]
fn transform_flower_petersen_verifies() {
    let p = emit_graph6(&Graph::petersen());
    let o = harris(&["transform", "flower", &p, "--verify"], "");
    assert!(o.status.success());
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g.n(), 15);
    let lib = is_harris(&g).is_harris;
    assert!(stderr(&o).contains(&format!("harris={lib}")));
    assert!(lib);
}

#[test]
fn transform_simplify_barnacle_free_warns() {
    let o = harris(&["transform", "simplify", "C~"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "C~");
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn transform_grow_then_simplify_via_stdin() {
    let o = harris(&["transform", "grow", ORDER_SEVEN, "--by", "2"], "");
    let grown = stdout(&o);
    assert_eq!(parse_graph6(grown.trim()).unwrap().n(), 9);
    let o = harris(&["transform", "simplify", "-"], &grown);
    assert!(o.status.success());
    let back = parse_graph6(stdout(&o).trim()).unwrap();
    assert!(harris::canon::is_isomorphic(&back, &parse_graph6(ORDER_SEVEN).unwrap()).unwrap());
}

#[test]
fn transform_validation_errors() {
    let o = harris(&["transform", "graft", ORDER_SEVEN, ORDER_SEVEN, "--edge-g", "0,1"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = harris(&["transform", "graft", ORDER_SEVEN, ORDER_SEVEN, "--edge-g", "zero"], "");
    assert_eq!(o.status.code(), Some(1));
    let o = harris(&["transform", "flower", "C"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = harris(&["transform", "grow", "C~"], "");
    assert_eq!(o.status.code(), Some(2));
    let disconnected = emit_graph6(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
    let o = harris(&["transform", "flower", &disconnected], "");
    assert_eq!(o.status.code(), Some(2));
    let big = emit_graph6(&Graph::cycle(30).unwrap());
    let o = harris(&["transform", "graft", &big, &big, "--verify"], "");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn help_exits_zero() {
    let o = harris(&["--help"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("Exit codes"));
}
