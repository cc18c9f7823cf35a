use std::process::{Command, Output};

fn ffmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffmzv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn zeta_expansion_starts_at_x_minus_two() {
    let o = ffmzv(&["zeta", "--curve", "case-i", "--tuple", "1,2", "--precision", "128"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["target"], "zeta");
    assert_eq!(v["params"]["even"]["top"], -2);
    assert!(v["params"]["expansion"].as_str().unwrap().starts_with("x^-2 + x^-3"));
}

#[test]
fn theorem_exit_codes() {
    let o = ffmzv(&["verify", "thm-3.3", "--d-range", "2..8", "--precision", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "PASS");
    let o = ffmzv(&["verify", "thm-3.3", "--precision", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["verdict"], "INCONCLUSIVE");
}

#[test]
fn failing_query_exits_one() {
    let o = ffmzv(&["zetalike", "--curve", "case-i", "--tuple", "2,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "FAIL");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["zeta", "--curve", "case-v", "--tuple", "1"][..],
        &["zeta", "--tuple", "1,x"],
        &["zeta"],
        &["verify", "thm-9"],
        &["verify", "thm-3.3", "--d-range", "8..2"],
        &["rank", "--set", "eleven"],
        &["frobnicate"],
    ] {
        let o = ffmzv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn weight_seven_witness_coefficients() {
    let o = ffmzv(&["verify", "thm-5.1", "--precision", "200", "--d-range", "2..4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let w = v["witnesses"].as_array().unwrap().iter().find(|w| w["name"] == "ratio").unwrap();
    assert_eq!(w["num_coeffs"], serde_json::json!([0, 0, 1, 0, 1]));
    assert_eq!(w["den_coeffs"], serde_json::json!([1, 0, 0, 1, 0, 1, 1, 0, 1]));
}

#[test]
fn empty_scan_csv_has_header() {
    let o = ffmzv(&["scan", "--max-weight", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tuple,weight,depth,verdict,ratio\n");
}

#[test]
fn output_is_deterministic_and_independent_of_jobs() {
    let args = ["scan", "--curve", "case-i", "--max-weight", "7", "--no-timing"];
    let a = ffmzv(&args);
    let b = ffmzv(&args);
    let mut more = args.to_vec();
    more.extend(["--jobs", "4"]);
    let c = ffmzv(&more);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn output_file_and_text_format() {
    let dir = std::env::temp_dir().join(format!("ffmzv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rank.txt");
    let o = ffmzv(&["rank", "--set", "planted", "--d-range", "1..5", "--format", "text", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("rank-weight3 PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn solve_and_relative_subcommands() {
    let o = ffmzv(&["solve", "--curve", "case-ii"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["params"]["systems"][0]["unknowns"], 35);
    let o = ffmzv(&["relative", "--curve", "case-i", "--precision", "100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("target,verdict,name,num_coeffs,den_coeffs\n"));
}

#[test]
fn data_directory_override() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let o = Command::new(env!("CARGO_BIN_EXE_ffmzv"))
        .args(["verify", "thm-3.3", "--d-range", "2..4", "--precision", "64"])
        .env("FFMZV_DATA", data)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let empty = std::env::temp_dir().join(format!("ffmzv-empty-{}", std::process::id()));
    std::fs::create_dir_all(&empty).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_ffmzv"))
        .args(["zeta", "--curve", "case-i", "--tuple", "1"])
        .env("FFMZV_DATA", &empty)
        .output()
        .unwrap();
    assert_ne!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&empty).unwrap();
}

#[test]
fn verify_all_returns_an_array() {
    let o = ffmzv(&["verify", "all", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let targets: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["target"].as_str().unwrap()).collect();
    assert_eq!(targets.len(), 11);
    assert_eq!(targets[0], "thm-3.3");
}
