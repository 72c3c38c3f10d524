//! The binary's exit-code contract, output formats and config precedence.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loglambert"))
        .args(args)
        .env_remove("LOGLAMBERT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_run_exits_zero_with_a_json_array() {
    let o = run(&["verify", "--identity", "thm1.1", "--y", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[0]["identity"], "lambert-log");
    for key in ["paper_ref", "params", "lhs", "rhs", "abs_err", "rel_err", "pass", "terms", "evals", "wall_ms"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    assert!(rows[0]["rel_err"].as_f64().unwrap() < 1e-9);
}

#[test]
fn configuration_errors_exit_two() {
    let o = run(&["verify", "--identity", "thm1.1", "--y", "-1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Re(y) must be positive"));
    assert_eq!(run(&["verify", "--identity", "thm7.7"]).status.code(), Some(2));
    assert_eq!(run(&["moment", "--delta", "4.0"]).status.code(), Some(2));
    assert_eq!(run(&["asympt", "--target", "thm3.1", "--z", "0,25", "--K", "5..2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--all", "--threads", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--function", "gamma", "--z", "1"]).status.code(), Some(2));
}

#[test]
fn numerical_failures_exit_one_and_keep_the_row() {
    let o = run(&["verify", "--identity", "wigert", "--y", "0.5", "--max-terms", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("no convergence"), "{text}");
}

#[test]
fn asympt_tables() {
    let o = run(&["asympt", "--target", "thm1.2", "--y", "0.05,0", "--K", "1..4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["asympt", "--target", "thm3.1", "--z", "0,25", "--K", "1..6"]);
    assert_eq!(o.status.code(), Some(0));
    let diffs: Vec<f64> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(8).unwrap().parse().unwrap()).collect();
    assert!(diffs[2] < 1e-3 * diffs[0], "{diffs:?}");
}

#[test]
fn moment_rows_and_summary() {
    let o = run(&["moment", "--delta", "0.4,0.2,0.1", "--rotated", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("cauchy shrinks"), "{err}");
}

#[test]
fn output_file_config_and_report() {
    let dir = std::env::temp_dir().join(format!("loglambert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("sweep.conf");
    let out = dir.join("rows.csv");
    std::fs::write(&conf, "identity = wigert;ramanujan\nformat = csv\nthreads = 2\n").unwrap();
    let o = run(&["verify", "--config", conf.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let rows = std::fs::read_to_string(&out).unwrap();
    assert_eq!(rows.lines().count(), 1 + 3 + 2);
    let o = run(&["report", "--input", out.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let summary = stdout(&o);
    assert!(summary.contains("wigert,3,3,0,0"), "{summary}");
    std::fs::remove_dir_all(&dir).unwrap();
}
