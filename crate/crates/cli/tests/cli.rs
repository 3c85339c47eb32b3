use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn cip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cip"))
        .args(args)
        .output()
        .expect("cip runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

fn write_k5(dir: &Path) -> PathBuf {
    let path = dir.join("k5.edges");
    let mut text = String::new();
    for u in 1..=5 {
        for v in u + 1..=5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn solve_k5_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_k5(dir.path());
    let out = cip(&["solve", "--graph", k5.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success(), "{out:?}");
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["theta"], 3);
    assert_eq!(report["status"], "optimal");
    assert_eq!(report["interdiction_set"].as_array().unwrap().len(), 2);
}

#[test]
fn fractional_budget_rounds_up() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_k5(dir.path());
    // ⌈0.3 · 5⌉ = 2
    let out = cip(&["solve", "--graph", k5.to_str().unwrap(), "--k-frac", "0.3"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["k"], 2);
    assert_eq!(report["theta"], 3);
}

#[test]
fn text_format() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_k5(dir.path());
    let out = cip(&["solve", "--graph", k5.to_str().unwrap(), "--k", "4", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("theta") && l.ends_with(" 1")), "{text}");
}

#[test]
fn both_budgets_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_k5(dir.path());
    let out = cip(&["solve", "--graph", k5.to_str().unwrap(), "--k", "1", "--k-frac", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cip(&["solve", "--graph", k5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_graph_fails_cleanly() {
    let out = cip(&["solve", "--graph", "/nonexistent/g.edges", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

#[test]
fn cfat_omega() {
    let out = cip(&["solve", "--graph", data("c-fat200-1.clq").to_str().unwrap(), "--k", "0"]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["theta"], 12);
    assert_eq!((report["n"].as_u64(), report["m"].as_u64()), (Some(200), Some(1534)));
}

#[test]
fn strong_triangle_flag_is_accepted() {
    let path = data("c-fat200-2.clq");
    let out = cip(&[
        "solve",
        "--graph",
        path.to_str().unwrap(),
        "--k",
        "1",
        "--enable-strong-triangle",
        "--strong-triangle-mode",
        "color",
        "--seed-order",
        "deg-asc",
    ]);
    assert!(out.status.success(), "{out:?}");
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // The single 24-clique is broken by one deletion.
    assert_eq!(report["theta"], 23);
    assert!(report["stages"]
        .as_array()
        .unwrap()
        .iter()
        .any(|s| s["stage"] == "strong-triangle"));
}

#[test]
fn bench_writes_one_row_per_graph_and_fraction() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["c-fat200-1.clq", "c-fat200-2.clq", "c-fat200-5.clq"] {
        fs::copy(data(name), dir.path().join(name)).unwrap();
    }
    let out = cip(&[
        "bench",
        "--graphs",
        dir.path().to_str().unwrap(),
        "--k-frac",
        "0.005,0.01",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success(), "{out:?}");
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "name");
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let names: Vec<&str> = rows.iter().map(|r| &r[col("name")]).collect();
    assert_eq!(
        names,
        ["c-fat200-1.clq", "c-fat200-1.clq", "c-fat200-2.clq", "c-fat200-2.clq", "c-fat200-5.clq", "c-fat200-5.clq"]
    );
    for r in &rows {
        assert_eq!(&r[col("status")], "optimal");
        // k = ⌈0.005 · 200⌉ = 1 and ⌈0.01 · 200⌉ = 2
        assert!(matches!(&r[col("k")], "1" | "2"));
        let lb: usize = r[col("lb")].parse().unwrap();
        let theta: usize = r[col("theta")].parse().unwrap();
        assert!(lb <= theta);
    }
}

#[test]
fn bench_row_for_a_graph_the_reductions_empty() {
    let dir = tempfile::tempdir().unwrap();
    write_k5(dir.path());
    let out = cip(&["bench", "--graphs", dir.path().to_str().unwrap(), "--k-frac", "1.0"]);
    assert!(out.status.success(), "{out:?}");
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let row = reader.records().next().unwrap().unwrap();
    let col = |name: &str| &row[headers.iter().position(|h| h == name).unwrap()];
    assert_eq!(col("k"), "5");
    assert_eq!(col("theta"), col("lb"));
    assert_eq!(col("theta"), "0");
    assert_eq!(col("master_iterations"), "0");
    assert_eq!(col("status"), "optimal");
}

#[test]
fn bench_skips_unreadable_files() {
    let dir = tempfile::tempdir().unwrap();
    write_k5(dir.path());
    fs::write(dir.path().join("broken.edges"), "1 2\nthree four\n").unwrap();
    let manifest = dir.path().join("manifest.txt");
    fs::write(&manifest, "# graphs\nk5.edges\nbroken.edges\nmissing.edges\n").unwrap();
    let out = cip(&["bench", "--manifest", manifest.to_str().unwrap(), "--k-frac", "0.2"]);
    assert!(out.status.success(), "{out:?}");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("skipping") && stderr.contains("broken.edges") && stderr.contains("missing.edges"));
    let rows: Vec<csv::StringRecord> = csv::Reader::from_reader(out.stdout.as_slice())
        .records()
        .map(Result::unwrap)
        .collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][0], "k5.edges");
}

#[test]
fn timeout_has_its_own_exit_code() {
    // Dense random graph with a sizeable budget: far beyond a millisecond.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dense.edges");
    let mut state: u64 = 7;
    let mut text = String::new();
    for u in 0..300u32 {
        for v in u + 1..300 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if state >> 33 & 1 == 1 {
                text.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    fs::write(&path, text).unwrap();
    let out = cip(&["solve", "--graph", path.to_str().unwrap(), "--k", "30", "--time-limit", "0.001"]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["status"], "timeout");
    assert!(report["lb"].as_u64() <= report["ub"].as_u64());

    let out = cip(&["bench", "--graphs", dir.path().to_str().unwrap(), "--k-frac", "0.1", "--time-limit", "0.001"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().contains(",TL,"), "{text}");
}

#[test]
fn verify_random_instances_agree() {
    let out = cip(&["verify", "--count", "40", "--seed", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("ok")).count(), 40);
}
