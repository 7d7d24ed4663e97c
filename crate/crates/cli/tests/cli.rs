use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use ifd::format::{load_graph, parse_partition, write_graph};
use ifd_core::partition::verify_ifd;
use proptest::prelude::*;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ifd(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ifd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

#[test]
fn mad_of_k4() {
    let r = ifd(&["mad", "-"], K4);
    assert_eq!((r.code, r.stdout.as_str()), (0, "3/1\n"));
}

#[test]
fn thresholds_by_girth() {
    for (g, line) in [
        ("7", "d_thm1=8 d_thm2=5 d_min=5\n"),
        ("8", "d_thm1=4 d_thm2=3 d_min=3\n"),
        ("10", "d_thm1=2 d_thm2=3 d_min=2\n"),
    ] {
        assert_eq!(ifd(&["threshold", "--girth", g], "").stdout, line);
    }
    assert_eq!(ifd(&["threshold", "--mad-bound", "14/5"], "").stdout, "d_thm1=8 d_thm2=5 d_min=5\n");
    assert_eq!(ifd(&["threshold"], "").code, 2);
    assert_eq!(ifd(&["threshold", "--girth", "8", "--mad-bound", "2"], "").code, 2);
}

#[test]
fn solve_output_passes_verify() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = file(dir.path(), "c5.txt", C5);
    let r = ifd(&["solve", "--M", "5/2", "--d", "2", s(&c5)], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim().len(), 5);
    let v = ifd(&["verify", s(&c5), "-", "--d", "2"], &r.stdout);
    assert_eq!((v.code, v.stdout.as_str()), (0, "valid\n"));
    let p = parse_partition(&r.stdout).unwrap();
    assert!(verify_ifd(&load_graph(C5).unwrap(), &p, 2).unwrap().valid);
}

#[test]
fn json_report_matches_text() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = file(dir.path(), "c5.txt", C5);
    let text = ifd(&["solve", "--M", "5/2", s(&c5)], "");
    let json = ifd(&["--json", "solve", "--M", "5/2", s(&c5)], "");
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["outcome"], "Partition");
    assert_eq!(v["data"]["partition"].as_str().unwrap(), text.stdout.trim());
    assert_eq!(v["data"]["d"], 2);
    assert_eq!(v["input_sha"].as_str().unwrap().len(), 64);
    assert!(v["command"].as_str().unwrap().starts_with("--json solve"));
    assert!(v["millis"].is_u64());
}

#[test]
fn dense_input_is_refused() {
    let r = ifd(&["solve", "--M", "14/5", "--d", "8", "-"], K4);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("PreconditionViolated:"), "{}", r.stderr);
    let j = ifd(&["--json", "solve", "--M", "14/5", "--d", "8", "-"], K4);
    let v: Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["outcome"], "PreconditionViolated");
}

#[test]
fn bad_inputs_and_usage() {
    let r = ifd(&["mad", "-"], "2 1\n0 0\n");
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("NotSimple"), "{}", r.stderr);
    assert!(ifd(&["mad", "-"], "3 1\n0 x\n").stderr.starts_with("ParseError"));
    assert_eq!(ifd(&["frobnicate"], "").code, 2);
    for args in [&["solve", "--M", "3", "-"][..], &["solve", "--M", "5/2", "--d", "1", "--theorem", "1", "-"]] {
        let r = ifd(args, C5);
        assert_eq!(r.code, 1);
        assert!(r.stderr.starts_with("InvalidParams"), "{}", r.stderr);
    }
    assert_eq!(ifd(&["solve", "--M", "5/2", "--theorem", "7", "-"], C5).code, 2);
    assert_eq!(ifd(&["mad", "/nonexistent/graph.txt"], "").code, 1);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = file(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let r = ifd(&["verify", s(&c4), "-", "--d", "2"], "FFFF\n");
    assert_eq!((r.code, r.stdout.as_str()), (1, "invalid\nCycleInF 0 1 2 3\n"));
    let good = ifd(&["verify", "--good", s(&c4), "-", "--d", "2"], "FFFF\n");
    assert_eq!(good.code, 0);
    let n = ifd(&["normalize", s(&c4), "-", "--d", "2"], "FFFF\n");
    assert_eq!(n.stdout, "IFIF\n");
}

#[test]
fn oracle_exit_codes() {
    assert_eq!(ifd(&["oracle", "--d", "3", "-"], K4).code, 3);
    let r = ifd(&["oracle", "--d", "1", "-"], C5);
    assert_eq!(r.code, 0);
    let p = parse_partition(&r.stdout).unwrap();
    assert!(verify_ifd(&load_graph(C5).unwrap(), &p, 1).unwrap().valid);
    let big = ifd(&["gen", "random", "--n", "30", "--m", "90", "--seed", "3"], "");
    assert_eq!(ifd(&["oracle", "--d", "0", "--budget-nodes", "1", "-"], &big.stdout).code, 4);
}

#[test]
fn generators_feed_other_commands() {
    let k4 = ifd(&["gen", "complete", "4"], "");
    assert_eq!(k4.stdout, K4);
    let dir = tempfile::tempdir().unwrap();
    let f = file(dir.path(), "k4.txt", &k4.stdout);
    let sub = ifd(&["gen", "subdivide", s(&f), "--k", "2"], "");
    let g = load_graph(&sub.stdout).unwrap();
    assert_eq!((g.n(), g.m()), (16, 18));
    assert_eq!(ifd(&["girth", "-"], &sub.stdout).stdout, "9\n");
    let c = ifd(&["gen", "corpus", "--family", "hubs", "--n-max", "80", "--M", "8/3", "--d", "3", "--seed", "5"], "");
    assert_eq!(c.code, 0, "{}", c.stderr);
    let again = ifd(&["gen", "corpus", "--family", "hubs", "--n-max", "80", "--M", "8/3", "--d", "3", "--seed", "5"], "");
    assert_eq!(c.stdout, again.stdout);
    let solved = ifd(&["solve", "--M", "8/3", "--d", "3", "-"], &c.stdout);
    assert_eq!(solved.code, 0, "{}", solved.stderr);
}

#[test]
fn trace_goes_to_stderr() {
    let r = ifd(&["solve", "--M", "5/2", "--trace", "-"], C5);
    assert_eq!(r.code, 0);
    assert!(r.stderr.lines().next().unwrap().starts_with("TwoSmall"), "{}", r.stderr);
    assert_eq!(r.stdout.lines().count(), 1);
}

#[test]
fn structure_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let tri = file(dir.path(), "tri.txt", "3 3\n0 1\n1 2\n0 2\n");
    let w = file(dir.path(), "w.txt", "0 1\n1 1\n2 1\n");
    let r = ifd(&["orient", s(&tri), "--omega", s(&w)], "");
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("feasible"));
    let e = file(dir.path(), "e.txt", "2 1\n0 1\n");
    let w2 = file(dir.path(), "w2.txt", "0 1\n1 1\n");
    let bad = ifd(&["orient", s(&e), "--omega", s(&w2)], "");
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.starts_with("Infeasible"));
    let d = ifd(&["discharge", "--M", "14/5", "--d", "8", "--theorem", "1", "-"], K4);
    assert_eq!(d.code, 0, "{}", d.stderr);
    assert!(d.stdout.contains("conserved=true"), "{}", d.stdout);
    let l = ifd(&["lightforest", "--d", "2", "-"], C5);
    assert_eq!(l.code, 1, "C5 still has configurations left");
}

#[test]
fn batch_examples() {
    let dir = tempfile::tempdir().unwrap();
    let empty = file(dir.path(), "empty.txt", "# nothing\n");
    let r = ifd(&["batch", s(&empty)], "");
    assert_eq!((r.code, r.stdout.as_str()), (0, "Partition=0 PreconditionViolated=0 InternalError=0\n"));

    file(dir.path(), "k4.txt", K4);
    let k4 = file(dir.path(), "k4m.txt", "k4.txt 14/5 8 1\n");
    let r = ifd(&["batch", s(&k4)], "");
    assert!(r.stdout.ends_with("Partition=0 PreconditionViolated=1 InternalError=0\n"), "{}", r.stdout);
    assert!(r.stdout.contains("verified=true"));

    let fams = ["random", "subdivided", "hubs", "paired"];
    let lines: String = (0..100).map(|i| format!("corpus:{}:120:{i} 8/3 3 2\n", fams[i % 4])).collect();
    let many = file(dir.path(), "many.txt", &lines);
    let r = ifd(&["--json", "batch", s(&many), "--threads", "4"], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["data"]["counts"]["Partition"], 100);
    assert!(v["data"]["rows"].as_array().unwrap().iter().all(|row| row["verified"] == true));

    let bad = file(dir.path(), "bad.txt", "cycle:5 5/2\n");
    let r = ifd(&["batch", s(&bad)], "");
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("ManifestError: line 1"), "{}", r.stderr);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_lists_round_trip(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[i] {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        let g = ifd_core::Graph::from_edges(n, &edges).unwrap();
        let text = write_graph(&g);
        prop_assert_eq!(load_graph(&text).unwrap(), g);
        prop_assert_eq!(write_graph(&load_graph(&text).unwrap()), text);
    }
}
