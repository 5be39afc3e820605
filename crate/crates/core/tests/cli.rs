use std::io::Cursor;
use std::process::Command;

use dessin_cover::cli::{run, Outcome};
use dessin_cover::format::{parse, Format};
use dessin_cover::to_involution;

const X_TREE: &str = "()()()((()))";

fn dessin(args: &[&str]) -> Outcome {
    let mut argv = vec!["dessin"];
    argv.extend_from_slice(args);
    run(argv, &mut std::io::empty())
}

fn value<'a>(out: &'a Outcome, key: &str) -> Option<&'a str> {
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

#[test]
fn invariants_report() {
    let out = dessin(&["invariants", "--format", "walk", X_TREE]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "n=6\no=4\ngenus=1\nd_c=2\nd_s=2\norder=3\n");
}

#[test]
fn invariants_rejects_genus_one() {
    let out = dessin(&["invariants", "--format", "involution", "2 3 0 1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("genus 1"));
}

#[test]
fn covers_and_expect() {
    let out = dessin(&["covers", "--target", "chain", "--d", "2", X_TREE]);
    assert_eq!((out.code, value(&out, "covers")), (0, Some("true")));
    let out = dessin(&[
        "covers", "--target", "chain", "--d", "3", "--expect", "yes", X_TREE,
    ]);
    assert_eq!((out.code, value(&out, "covers")), (1, Some("false")));
    let out = dessin(&[
        "covers", "--target", "star", "--d", "3", "--expect", "no", X_TREE,
    ]);
    assert_eq!(out.code, 0);
    let out = dessin(&["covers", "--target", "tree", "--d", "2", X_TREE]);
    assert_eq!(value(&out, "quotient"), Some("1 0 3 2"));
    let out = dessin(&["covers", "--target", "tree", "--d", "4", X_TREE]);
    assert_eq!(value(&out, "reason"), Some("divisibility"));
    let out = dessin(&["covers", "--target", "tree", "--d", "1", "2 3 0 1"]);
    assert_eq!(value(&out, "reason"), Some("fixed-block"));
    let out = dessin(&["covers", "--target", "chain", "--d", "1", "2 3 0 1"]);
    assert_eq!(out.code, 2);
}

#[test]
fn phi_canonical_is_rotation_independent() {
    let plain = dessin(&["phi", "((()))"]);
    assert_eq!(plain.stdout, "5 4 3 2 1 0\n");
    let mut seen = Vec::new();
    let inv = to_involution(parse(X_TREE, Format::Walk).unwrap().map()).unwrap();
    for k in 0..12 {
        let text = inv.rotate(k).to_string();
        let out = dessin(&["phi", "--canonical", "--format", "involution", &text]);
        assert_eq!(out.code, 0);
        seen.push(out.stdout);
    }
    seen.dedup();
    assert_eq!(seen.len(), 1);
}

#[test]
fn quotient_output_reparses() {
    for (fmt, f) in [
        ("walk", Format::Walk),
        ("rotation", Format::Rotation),
        ("involution", Format::Involution),
    ] {
        let out = dessin(&["quotient", "--d", "3", "--out-format", fmt, "()()()()()()"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let text = value(&out, "quotient").unwrap();
        let q = to_involution(parse(text, f).unwrap().map()).unwrap();
        assert_eq!(q.canonical_form().as_slice(), &[1, 0, 3, 2, 5, 4]);
    }
    let out = dessin(&["quotient", "--d", "3", X_TREE]);
    assert_eq!(out.code, 2);
}

#[test]
fn enumerate_counts_and_filter() {
    let out = dessin(&[
        "enumerate",
        "--edges",
        "3",
        "--mode",
        "rooted",
        "--count-only",
    ]);
    assert_eq!(out.stdout, "count=5\n");
    let out = dessin(&["enumerate", "--edges", "3"]);
    assert_eq!(out.stdout, "tree=()(())\ntree=()()()\ncount=2\n");
    let out = dessin(&["enumerate", "--edges", "6", "--filter", "genus=1,order=3"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.lines().any(|l| l == "tree=()()()((()))"),
        "{}",
        out.stdout
    );
    let out = dessin(&["enumerate", "--edges", "6", "--filter", "shape=1"]);
    assert_eq!(out.code, 2);
}

#[test]
fn search_and_verify() {
    let out = dessin(&["search", "--genus", "1", "--order", "3"]);
    assert_eq!(value(&out, "found"), Some("true"));
    assert_eq!(value(&out, "genus"), Some("1"));
    assert_eq!(value(&out, "order"), Some("3"));
    let out = dessin(&["search", "--genus", "3", "--order", "2", "--max-edges", "4"]);
    assert_eq!(out.stdout, "found=false\n");
    let out = dessin(&["verify", "--max-edges", "5"]);
    assert_eq!(out.code, 0);
    assert_eq!(value(&out, "discrepancies"), Some("0"));
    assert_eq!(value(&out, "trees.5"), Some("6"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dessin(&["frobnicate"]).code, 2);
    assert_eq!(dessin(&["covers", "--d", "2", X_TREE]).code, 2);
    assert_eq!(dessin(&["invariants", "(()"]).code, 2);
    assert_eq!(dessin(&["invariants", "--format", "dyck", X_TREE]).code, 2);
    assert_eq!(dessin(&["--help"]).code, 0);
}

#[test]
fn stdin_and_file_input() {
    let out = run(
        ["dessin", "invariants", "-"],
        &mut Cursor::new("0: 1 2 3\n1: 0\n2: 0\n3: 0\n"),
    );
    assert_eq!(value(&out, "d_s"), Some("3"));
    let path = std::env::temp_dir().join(format!("dessin-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "0: 1\n1: 0 2\n2: 1\n").unwrap();
    let out = dessin(&["invariants", "--format", "rotation", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(value(&out, "d_c"), Some("2"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dessin");
    let out = Command::new(bin)
        .args(["covers", "--target", "chain", "--d", "2", X_TREE])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "covers=true\n");
    let out = Command::new(bin)
        .args([
            "covers", "--target", "chain", "--d", "3", "--expect", "yes", X_TREE,
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
