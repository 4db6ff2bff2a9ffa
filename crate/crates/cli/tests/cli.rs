use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tdsearch(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tdsearch"))
        .args(args)
        .env_remove("TDSEARCH_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tdsearch");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixture_one_as_adjacency_list() {
    let o = tdsearch(&["fixtures", "--id", "1", "--format", "adjlist"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# graph #1: n=21, r=10"));
    assert_eq!(lines.next(), Some("1: 2 3 4 8 11 13 14 16 19 21 | 10"));
    assert_eq!(text.lines().count(), 22);
    assert!(text.trim_end().ends_with("| 30"));
}

#[test]
fn fixtures_round_trip_through_scan() {
    let g6 = tdsearch(&["fixtures", "--format", "g6"], None);
    assert_eq!(stdout(&g6).lines().count(), 11);
    let o = tdsearch(&["--json", "scan"], Some(&g6.stdout));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (
            v["total"].as_u64(),
            v["td"].as_u64(),
            v["regular_td"].as_u64()
        ),
        (Some(11), Some(11), Some(11))
    );
}

#[test]
fn filtered_scan_rescans_to_all_td() {
    let mut input = b"Bw\nA?\nCF\n".to_vec();
    input.extend(tdsearch(&["fixtures", "--id", "4"], None).stdout);
    let o = tdsearch(&["scan", "--filter-td"], Some(&input));
    assert_eq!(o.status.code(), Some(0));
    let kept = stdout(&o);
    // only the fixture survives the filter
    assert_eq!(kept.lines().count(), 1);
    let o = tdsearch(&["--json", "scan"], Some(kept.as_bytes()));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["td"], v["total"]);
}

#[test]
fn missing_scan_input_exits_4() {
    let o = tdsearch(&["scan", "missing.g6"], None);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn strict_scan_rejects_garbage() {
    let o = tdsearch(&["scan", "--strict"], Some(b"Bw\n!!\n"));
    assert_eq!(o.status.code(), Some(4));
    let o = tdsearch(&["--json", "scan"], Some(b"Bw\n!!\n"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (v["total"].as_u64(), v["skipped"].as_u64()),
        (Some(1), Some(1))
    );
}

#[test]
fn necessary_condition_violation_exits_2() {
    let o = tdsearch(
        &["search", "--n", "21", "--r", "5", "--time-limit", "1"],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("C(5,2) = 10 < n - 1 = 20"), "{err}");
}

#[test]
fn search_from_fixture_reports_td() {
    let start = std::env::temp_dir().join(format!("tdsearch-start-{}.g6", std::process::id()));
    std::fs::write(&start, tdsearch(&["fixtures", "--id", "2"], None).stdout).unwrap();
    let args = [
        "search",
        "--n",
        "21",
        "--r",
        "10",
        "--time-limit",
        "10",
        "--start",
        start.to_str().unwrap(),
    ];
    let o = tdsearch(&args, None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 1 + 21);
    // the manifest is one JSON record on stderr
    let err = String::from_utf8(o.stderr).unwrap();
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["subcommand"], "search");
    assert_eq!(v["result"]["is_td"], true);
    assert_eq!(v["result"]["graph6"].as_str(), text.lines().next());
    std::fs::remove_file(start).ok();
}

#[test]
fn expired_budget_exits_3() {
    let o = tdsearch(
        &[
            "--json",
            "search",
            "--n",
            "13",
            "--r",
            "6",
            "--time-limit",
            "0.3",
            "--seed",
            "4",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["result"]["is_td"], false);
    assert_eq!(v["worker_seeds"], serde_json::json!([4]));
}

#[test]
fn manifests_match_up_to_timing() {
    let args = [
        "--json",
        "search",
        "--n",
        "12",
        "--r",
        "6",
        "--time-limit",
        "30",
        "--seed",
        "9",
        "--stagnation",
        "2",
        "--kmax",
        "3",
    ];
    let run = || {
        let o = tdsearch(&args, None);
        assert_eq!(o.status.code(), Some(3));
        let mut v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_reports_claim_mismatches() {
    let text = stdout(&tdsearch(
        &["fixtures", "--id", "7", "--format", "adjlist"],
        None,
    ));
    let o = tdsearch(&["verify", "-"], Some(text.as_bytes()));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=24, edges=132, 11-regular"));
    let bad = text.replacen("r=11", "r=10", 1);
    let o = tdsearch(&["--json", "verify", "-"], Some(bad.as_bytes()));
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["mismatches"][0], "claimed degree 10, actual 11");
}

#[test]
fn complement_of_k4_is_empty() {
    let o = tdsearch(&["complement"], Some(b"C~\n"));
    assert_eq!(stdout(&o), "C?\n");
    let o = tdsearch(&["--json", "verify", "-"], Some(b"C~\n"));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (
            v["regular_degree"].as_u64(),
            v["f2"].as_u64(),
            v["is_td"].as_bool()
        ),
        (Some(3), Some(6), Some(false))
    );
}

#[test]
fn gen_is_seeded_and_regular() {
    let a = tdsearch(&["gen", "--n", "20", "--r", "7", "--seed", "5"], None);
    let b = tdsearch(&["gen", "--n", "20", "--r", "7", "--seed", "5"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = tdsearch(&["--json", "verify", "-"], Some(&a.stdout));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["regular_degree"].as_u64(), Some(7));
    assert_eq!(
        tdsearch(&["gen", "--n", "5", "--r", "3"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        tdsearch(&["search", "--n", "12"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        tdsearch(&["fixtures", "--id", "12"], None).status.code(),
        Some(2)
    );
    assert_eq!(tdsearch(&["bogus"], None).status.code(), Some(2));
}
