use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
}

fn run(args: &[&str], input: &str) -> Out {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wheelworks"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Out {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn gen(spec: &str) -> String {
    let out = run(&["gen", spec], "");
    assert_eq!(out.code, 0);
    out.stdout
}

fn json(out: &Out) -> Value {
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn detect_exit_codes() {
    assert_eq!(run(&["detect", "--pattern", "theta"], &gen("cube")).code, 1);
    assert_eq!(run(&["detect", "--pattern", "theta"], &gen("cube")).stdout.trim(), "none");
    let found = run(&["detect", "--pattern", "theta"], &gen("theta:2,2,2"));
    assert_eq!(found.code, 0);
    assert_eq!(json(&found)["certificate"]["pattern"], "theta");
    assert_eq!(run(&["detect", "--pattern", "sijk:1,1,1"], &gen("kst:1,3")).code, 0);
    assert_eq!(run(&["detect", "--pattern", "bogus"], &gen("cube")).code, 2);
    assert_eq!(run(&["detect", "--pattern", "theta"], "not graph6\n").code, 2);
}

#[test]
fn treewidth_and_separator_counts() {
    let tw = run(&["tw"], &gen("cube"));
    assert_eq!(tw.code, 0);
    assert_eq!(json(&tw)["width"], 3);
    assert_eq!(json(&tw)["schema"], "wheelworks/1");
    let seps = run(&["seps", "--count"], &gen("kst:2,4"));
    assert_eq!(json(&seps)["count"], 2);
    let td = run(&["tw", "--td"], &gen("cycle:5"));
    assert!(td.stdout.starts_with("s td "));
}

#[test]
fn bounds() {
    let b = run(&["bound", "ttf", "-k", "1"], "");
    assert_eq!(b.code, 0);
    assert_eq!(json(&b)["value"], 431);
    assert_eq!(json(&run(&["bound", "main", "-t", "3", "-l", "1"], ""))["value"], 249);
    assert_eq!(run(&["bound", "ehf", "-k", "1"], "").code, 2);
}

#[test]
fn verify_targets() {
    let r = run(&["verify", "--target", "lemma6", "--order", "6"], "");
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["violations"].as_array().unwrap().len(), 0);
    let r = run(&["verify", "--target", "lemma10", "--family", "spanwheel:k=1", "--samples", "5", "--seed", "7"], "");
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["applicable"], 5);
    assert_eq!(run(&["verify", "--target", "lemma4", "--order", "5"], "").code, 2);
    assert_eq!(run(&["verify", "--target", "thm1"], "").code, 2);
}

#[test]
fn reruns_are_byte_identical() {
    let a = run(&["verify", "--target", "thm1", "--samples", "20", "--seed", "3", "--min-n", "6", "--max-n", "9"], "");
    let b = run(&["verify", "--target", "thm1", "--samples", "20", "--seed", "3", "--min-n", "6", "--max-n", "9"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["pmcs"], &gen("cube")).stdout, run(&["pmcs"], &gen("cube")).stdout);
}

#[test]
fn certificates_pass_the_checker() {
    let dir = std::env::temp_dir().join(format!("wheelworks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases: [(&str, &[&str]); 7] = [
        ("cube", &["tw"]),
        ("kst:2,4", &["seps"]),
        ("cube", &["pmcs"]),
        ("ladder:2", &["atoms"]),
        ("turtle:1,1", &["mis"]),
        ("theta:2,2,3", &["detect", "--pattern", "theta"]),
        ("cycle:8", &["extract"]),
    ];
    for (i, (spec, cmd)) in cases.iter().enumerate() {
        let g6 = gen(spec);
        let cert = run(cmd, &g6);
        assert_eq!(cert.code, 0, "{spec} {cmd:?}");
        let gpath = dir.join(format!("g{i}.g6"));
        let cpath = dir.join(format!("c{i}.json"));
        std::fs::write(&gpath, &g6).unwrap();
        std::fs::write(&cpath, &cert.stdout).unwrap();
        let check = run(&["check", "--file", gpath.to_str().unwrap(), "--cert", cpath.to_str().unwrap()], "");
        assert_eq!(check.code, 0, "{spec} {cmd:?}: {}", check.stdout);
        // The same certificate against another graph is rejected.
        let other = run(&["check", "--cert", cpath.to_str().unwrap()], &gen("complete:3"));
        assert_eq!(other.code, 1, "{spec} {cmd:?}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn extraction_reports_span_wheels_and_forbidden_configurations() {
    assert_eq!(run(&["extract", "--separator", "0,1"], &gen("cube")).code, 2);
    let c8 = run(&["extract"], &gen("cycle:8"));
    assert_eq!(json(&c8)["outcome"], "span_wheel");
    let theta = run(&["extract", "--separator", "0,1"], &gen("theta:2,2,2"));
    assert_eq!(json(&theta)["outcome"], "span_wheel");
    let t = run(&["extract", "--separator", "2,4,6"], &gen("theta:3,3,3"));
    assert_eq!(t.code, 0);
    assert_eq!(json(&t)["outcome"], "forbidden");
}

#[test]
fn generator_modes() {
    let all = run(&["gen", "--connected", "5"], "");
    assert_eq!(all.stdout.lines().count(), 21);
    let rnd = run(&["gen", "--random", "7", "--samples", "3", "--seed", "1"], "");
    assert_eq!(rnd.stdout.lines().count(), 3);
    let el = run(&["gen", "cycle:4", "--format", "edgelist"], "");
    assert_eq!(el.stdout, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    let back = run(&["tw", "--format", "edgelist"], &el.stdout);
    assert_eq!(json(&back)["width"], 2);
    assert_eq!(run(&["seps", "--count"], "A_\n@\n").code, 2);
}
