use colorcode_cli::{run, EXIT_GUARD, EXIT_NO, EXIT_USAGE, EXIT_YES};
use serde_json::Value;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("colorcode").chain(args.iter().copied()).collect();
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const C5: &str = "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";

#[test]
fn yes_and_no_exit_codes() {
    let (code, out, _) = call(&["vc", "--input", "-", "--k", "3"], C5);
    assert_eq!(code, EXIT_YES);
    assert!(out.starts_with("vc: yes\n"));
    let (code, out, _) = call(&["vc", "--input", "-", "--k", "2"], C5);
    assert_eq!(code, EXIT_NO);
    assert!(out.starts_with("vc: no\n"));
}

#[test]
fn json_answer_matches_exit_code() {
    for args in [
        &["path", "--input", "-", "--k", "5"][..],
        &["matching", "--input", "-", "--k", "3"],
        &["cluster", "--input", "-", "--k", "2", "--l", "1"],
        &["cut", "--input", "-", "--k", "2", "--l", "2"],
        &["epvc", "--input", "-", "--t", "4"],
        &["pack", "--input", "-", "--pattern", "kK2:2"],
    ] {
        let mut argv = args.to_vec();
        argv.push("--json");
        let (code, out, _) = call(&argv, C5);
        let doc: Value = serde_json::from_str(out.trim()).unwrap();
        let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["problem", "params", "answer", "witness", "stats"]);
        let answer = doc["answer"].as_bool().unwrap();
        assert_eq!(code, if answer { EXIT_YES } else { EXIT_NO }, "{args:?}");
        assert_eq!(doc["witness"].is_null(), !answer);
    }
}

#[test]
fn witnesses_are_one_based() {
    let (_, out, _) = call(&["vc", "--input", "-", "--k", "3", "--json", "--reproducible"], C5);
    let doc: Value = serde_json::from_str(out.trim()).unwrap();
    let vertices: Vec<u64> =
        doc["witness"]["vertices"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert!(vertices.iter().all(|&v| (1..=5).contains(&v)));
    assert_eq!(doc["stats"]["threads"], 0);
    let (_, out, _) = call(&["path", "--input", "-", "--k", "5", "--witness"], C5);
    assert!(out.lines().nth(1).unwrap().trim_start().starts_with("path: "));
}

#[test]
fn engines_agree() {
    for engine in ["colorcode", "exhaustive", "oracle"] {
        let (code, _, _) = call(&["matching", "--input", "-", "--k", "2", "--engine", engine], C5);
        assert_eq!(code, EXIT_YES, "{engine}");
        let (code, _, _) = call(&["matching", "--input", "-", "--k", "3", "--engine", engine], C5);
        assert_eq!(code, EXIT_NO, "{engine}");
    }
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(call(&["vc", "--k", "1"], "").0, EXIT_USAGE);
    assert_eq!(call(&["vc", "--input", "-", "--k", "1"], "3 1\n1 4\n").0, EXIT_USAGE);
    let (code, _, err) = call(&["distance", "--input", "-", "--s", "0", "--t", "2", "--d", "1"], C5);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--s"));
    assert_eq!(call(&["vc", "--input", "-", "--k", "1", "--threads", "0"], C5).0, EXIT_USAGE);
    assert_eq!(call(&["pack", "--input", "-", "--pattern", "blob:2"], C5).0, EXIT_USAGE);
}

#[test]
fn oracle_guard_exit_code() {
    let big = "11 1\n1 2\n";
    let (code, _, err) = call(&["matching", "--input", "-", "--k", "1", "--engine", "oracle"], big);
    assert_eq!(code, EXIT_GUARD);
    assert!(!err.is_empty());
}

#[test]
fn family_commands() {
    let (code, out, _) = call(&["verify-family", "--n", "6", "--k", "2", "--c", "2"], "");
    assert_eq!(code, EXIT_YES);
    assert!(out.starts_with("covered count=1040 "));
    let (code, out, _) = call(&["family", "--n", "3", "--k", "1", "--c", "2"], "");
    assert_eq!(code, EXIT_YES);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("ucf 3 1 2 4"));
    assert!(lines.all(|l| l.split(' ').count() == 3));
}

#[test]
fn bench_reports_every_run() {
    let (code, out, _) = call(&["bench", "--random-n", "20", "--k", "2", "--sweep", "1,2", "--runs", "2"], "");
    assert_eq!(code, EXIT_YES);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.starts_with("threads=")));
}
