use std::process::{Command, Output};

use qfano::CandidateRecord;

fn qfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfano"))
        .args(args)
        .env_remove("QFANO_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_example_passes() {
    let o = qfano(&["verify-example"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    for needle in [
        "54,46,26,26,53/2,80/3",
        "80/3 = 8*(10/3)",
        "g = 14",
        "- t^9",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
}

#[test]
fn hilbert_prints_plurigenera() {
    let o = qfano(&[
        "hilbert", "--q", "2", "--A3", "10/3", "--basket", "3,1,1", "--terms", "2",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 5 16");
    let o = qfano(&[
        "hilbert",
        "--q",
        "2",
        "--A3",
        "7/3",
        "--basket",
        "1*1/3(1,2,1)",
        "--terms",
        "3",
    ]);
    assert_eq!(stdout(&o).trim(), "1 4 12 27");
}

#[test]
fn search_q19_gives_one_record() {
    let o = qfano(&["search", "--q", "19"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let rec = CandidateRecord::from_json_line(lines[0]).unwrap();
    assert_eq!(rec.a3.to_string(), "1/420");
    assert!(lines[0].contains("\"A3\":\"1/420\""));
    assert_eq!(rec.genus, 7);
}

#[test]
fn search_output_is_reproducible() {
    let a = qfano(&["search", "--q", "11"]);
    let b = qfano(&["search", "--q", "11"]);
    let c = qfano(&["search", "--q", "11", "--partitions", "6"]);
    let d = Command::new(env!("CARGO_BIN_EXE_qfano"))
        .args(["search", "--q", "11", "--partitions", "3"])
        .env("QFANO_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(a.stdout, d.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
}

#[test]
fn search_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q13.jsonl");
    let o = qfano(&[
        "search",
        "--q",
        "13",
        "--genus-min",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let recs: Vec<_> = text
        .lines()
        .map(|l| CandidateRecord::from_json_line(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].genus, 18);
}

#[test]
fn wps_format_and_ledger_commands() {
    let o = qfano(&["wps", "3,4,5,7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("1/420") && text.contains("19"), "{text}");

    let o = qfano(&["format", "hyp:6@1,1,2,3,5", "--terms", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 2 4 7 11"), "{}", stdout(&o));

    let o = qfano(&["ledger", "blowpt, contractpt", "--start", "54"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("54,46,54"), "{}", stdout(&o));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(
        qfano(&["hilbert", "--q", "2", "--A3", "x/3"]).status.code(),
        Some(2)
    );
    assert_eq!(qfano(&["format", "cone:1,2"]).status.code(), Some(2));
    assert_eq!(
        qfano(&["ledger", "explode", "--start", "54"]).status.code(),
        Some(2)
    );
    assert_eq!(qfano(&["frobnicate"]).status.code(), Some(2));
}
