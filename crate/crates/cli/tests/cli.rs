use std::process::{Command, Output};

fn cozero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cozero"))
        .args(args)
        .env_remove("COZERO_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn spectrum_text_for_fifteen() {
    let o = cozero(&["spectrum", "15", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "6^1 4^1 2^3 0^1\n");
}

#[test]
fn spectrum_json_for_thirty() {
    let o = cozero(&["spectrum", "30", "--format", "json", "--no-timestamp"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    let total: u64 = v["spectrum"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(total, 21);
    assert!(v.get("generated_at").is_none());

    let stamped = cozero(&["spectrum", "30", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&stamped)).unwrap();
    assert!(v["generated_at"].as_u64().unwrap() > 0);
}

#[test]
fn spectrum_csv_rows() {
    let o = cozero(&["spectrum", "15", "--format", "csv"]);
    assert_eq!(stdout(&o), "value,multiplicity,exact\n6,1,false\n4,1,true\n2,3,true\n0,1,false\n");
}

#[test]
fn degenerate_inputs_exit_two() {
    let prime = cozero(&["spectrum", "7"]);
    assert_eq!(code(&prime), 2);
    assert!(stderr(&prime).contains("prime"));
    assert!(stdout(&prime).is_empty());

    let power = cozero(&["spectrum", "8"]);
    assert_eq!(code(&power), 2);
    assert_eq!(stdout(&power), "0^3\n");

    assert_eq!(code(&cozero(&["verify", "7919"])), 2);
    assert_eq!(code(&cozero(&["structure", "13"])), 2);
    assert_eq!(code(&cozero(&["integrality", "13"])), 2);
}

#[test]
fn verify_passes_and_reports_closed_form() {
    let o = cozero(&["verify", "30"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("PASS\n"));

    let o = cozero(&["verify", "15"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pq closed form: match"));

    let o = cozero(&["verify", "12", "--format", "json", "--no-timestamp", "--check-definition"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["vertex_count"], 7);
    assert_eq!(v["assembled_integral"], false);
}

#[test]
fn vertex_cap_exits_three() {
    let o = cozero(&["verify", "30", "--cap", "10"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("cap"));

    let env = Command::new(env!("CARGO_BIN_EXE_cozero"))
        .args(["verify", "30"])
        .env("COZERO_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);

    // the flag wins over the environment
    let both = Command::new(env!("CARGO_BIN_EXE_cozero"))
        .args(["verify", "30", "--cap", "100"])
        .env("COZERO_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(code(&both), 0);

    assert_eq!(code(&cozero(&["structure", "30", "--format", "dot", "--full", "--cap", "5"])), 3);
}

#[test]
fn usage_errors_exit_sixty_four() {
    for args in [
        vec!["spectrum"],
        vec!["spectrum", "abc"],
        vec!["spectrum", "1"],
        vec!["frobnicate"],
        vec!["scan", "9", "5"],
        vec!["scan", "1", "5"],
        vec!["spectrum", "12", "--tol", "0"],
        vec!["spectrum", "12", "--merge-tol", "-1"],
        vec!["spectrum", "12", "--format", "xml"],
        vec!["spectrum", "12", "--format", "dot"],
        vec!["structure", "12", "--full"],
        vec!["scan", "6", "10", "--filter", "nope"],
    ] {
        assert_eq!(code(&cozero(&args)), 64, "{args:?}");
    }
    assert_eq!(code(&cozero(&["--help"])), 0);
    assert_eq!(code(&cozero(&["--version"])), 0);
}

#[test]
fn scan_single_row_and_family() {
    let o = cozero(&["scan", "6", "6", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("6,pass,3,2,"));

    let o = cozero(&["scan", "6", "100", "--filter", "pq", "--format", "json", "--no-timestamp", "--jobs", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let ns: Vec<u64> = rows.iter().map(|r| r["n"].as_u64().unwrap()).collect();
    let mut sorted = ns.clone();
    sorted.sort_unstable();
    assert_eq!(ns, sorted);
    assert_eq!(ns.len(), 30);
    assert!(rows.iter().all(|r| r["status"] == "pass" && r["laplacian_integral"] == true));
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn scan_skips_over_cap_without_failing() {
    let o = cozero(&["scan", "20", "30", "--cap", "12", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("30,skip,"));
}

#[test]
fn scan_output_is_deterministic() {
    let args = ["scan", "4", "60", "--format", "json", "--no-timestamp"];
    let a = cozero(&args);
    let b = cozero(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn structure_outputs() {
    let dot = cozero(&["structure", "30", "--format", "dot"]);
    assert_eq!(code(&dot), 0);
    let text = stdout(&dot);
    assert_eq!(text.matches("label=").count(), 6);
    assert_eq!(text.matches(" -- ").count(), 9);

    let o = cozero(&["structure", "12", "--format", "json", "--no-timestamp"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let weights: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(weights, vec![2, 2, 2, 1]);
    assert_eq!(v["edges"], serde_json::json!([[2, 3], [3, 4], [4, 6]]));

    let o = cozero(&["structure", "4", "--format", "json", "--no-timestamp"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"], serde_json::json!([{ "d": 2, "size": 1, "D": 0 }]));

    let csv = cozero(&["structure", "12", "--format", "csv"]);
    assert_eq!(stdout(&csv), "divisor,2,3,4,6\n2,2,-2,0,0\n3,-2,4,-2,0\n4,0,-2,3,-1\n6,0,0,-2,2\n");

    let full = cozero(&["structure", "15", "--format", "dot", "--full"]);
    assert_eq!(stdout(&full).matches(" -- ").count(), 8);
}

#[test]
fn integrality_census() {
    let o = cozero(&["integrality", "12"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not integral"));

    let o = cozero(&["integrality", "4", "40", "--filter", "pq", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(1) == Some("true")));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("cozero-out-{}.txt", std::process::id()));
    let o = cozero(&["spectrum", "15", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "6^1 4^1 2^3 0^1\n");
    let _ = std::fs::remove_file(path);
}
