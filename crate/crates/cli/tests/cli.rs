use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfbrace"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn zoo(dir: &Path, args: &[&str], name: &str) -> PathBuf {
    let mut full = vec!["zoo"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", name]);
    let out = run(dir, &full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    dir.join(name)
}

#[test]
fn zoo_objects_verify() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    zoo(d, &["cyclic", "-n", "6"], "c6.json");
    zoo(d, &["h4", "--field", "fp:5"], "h4.json");
    zoo(d, &["c3-c6"], "mp.json");
    let out = run(d, &["verify", "hopf", "c6.json"]);
    assert_eq!(code(&out), 0);
    let out = run(d, &["--field", "fp:5", "verify", "hopf", "h4.json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = run(d, &["verify", "matched-pair", "mp.json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("mp4"));
}

#[test]
fn braid_pipeline_on_the_c3_c6_brace() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    zoo(d, &["c3-c6-brace"], "b.json");
    assert_eq!(code(&run(d, &["verify", "brace", "b.json"])), 0);
    let out = run(d, &["braid", "make", "b.json", "-o", "c.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("wrote c.json (matrix"), "{}", stdout(&out));
    assert_eq!(code(&run(d, &["braid", "check", "c.json"])), 0);
    assert_eq!(code(&run(d, &["qybe", "check", "--from-braid", "c.json"])), 0);
}

#[test]
fn recipes_build_and_refuse() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    zoo(d, &["c3-c6"], "mp.json");
    let out = run(d, &["build", "brace", "--recipe", "cor-11.11", "mp.json", "-o", "b.json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&run(d, &["verify", "brace", "b.json"])), 0);

    zoo(d, &["cyclic", "-n", "3"], "c3.json");
    zoo(d, &["symmetric", "-n", "3"], "s3.json");
    assert_eq!(code(&run(d, &["build", "trivial-brace", "s3.json", "-o", "ts3.json"])), 0);
    // H must be commutative for cor-11.00.
    zoo(d, &["cn-action", "-n", "2", "--omega", "-1"], "act.json");
    let out = run(d, &["build", "brace", "--recipe", "cor-11.00", "ts3.json", "s3.json", "act.json", "-o", "x.json"]);
    assert_ne!(code(&out), 0);
    assert!(!d.join("x.json").exists());
}

#[test]
fn refusals_and_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    zoo(d, &["h4"], "h4.json");
    let out = run(d, &["build", "opposite-brace", "h4.json", "-o", "o.json"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("S^2(x) = -1*x"), "{}", String::from_utf8_lossy(&out.stderr));

    zoo(d, &["h4-cn-brace", "-n", "2", "--omega", "-1", "--lambda", "1"], "hb.json");
    assert_eq!(code(&run(d, &["verify", "brace", "hb.json"])), 0);
    assert_eq!(code(&run(d, &["braid", "make", "hb.json", "-o", "c.json"])), 1);

    // field mismatch and malformed input are input errors
    assert_eq!(code(&run(d, &["--field", "fp:5", "verify", "hopf", "h4.json"])), 2);
    std::fs::write(d.join("bad.json"), "{\"kind\": \"hopf\", \"field\": \"Q\", \"dim\": 1, \"oops\": 1}").unwrap();
    assert_eq!(code(&run(d, &["verify", "hopf", "bad.json"])), 2);
    assert_eq!(code(&run(d, &["verify", "hopf", "missing.json"])), 2);
    assert_eq!(code(&run(d, &["frobnicate"])), 2);
}

#[test]
fn broken_object_reports_witness() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let path = zoo(d, &["cyclic", "-n", "2"], "c2.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["antipode"][0][2] = serde_json::json!("2");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let out = run(d, &["--report", "json", "verify", "hopf", "c2.json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let failed: Vec<&serde_json::Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(failed.iter().any(|c| c["name"] == "left antipode"));
    assert!(failed.iter().all(|c| c["witness"]["index"].is_array()));
}

#[test]
fn equalizer_and_product() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    zoo(d, &["cyclic", "-n", "2"], "c2.json");
    zoo(d, &["cyclic", "-n", "3"], "c3.json");
    assert_eq!(code(&run(d, &["build", "trivial-brace", "c2.json", "-o", "t2.json"])), 0);
    assert_eq!(code(&run(d, &["build", "trivial-brace", "c3.json", "-o", "t3.json"])), 0);
    let out = run(d, &["cat", "product", "t2.json", "t3.json", "-o", "p.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(d, &["verify", "brace", "p.json"])), 0);

    std::fs::write(
        d.join("id.json"),
        r#"{"kind": "matrix", "field": "Q", "rows": 3, "cols": 3, "entries": [[0, 0, "1"], [1, 1, "1"], [2, 2, "1"]]}"#,
    )
    .unwrap();
    std::fs::write(
        d.join("sq.json"),
        r#"{"kind": "matrix", "field": "Q", "rows": 3, "cols": 3, "entries": [[0, 0, "1"], [2, 1, "1"], [1, 2, "1"]]}"#,
    )
    .unwrap();
    for (m, name) in [("id.json", "f.json"), ("sq.json", "g.json")] {
        let out = run(d, &["build", "morphism", "t3.json", "t3.json", m, "-o", name]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    let out = run(d, &["cat", "equalize", "f.json", "g.json", "-o", "e.json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("(brace, dim 1"), "{}", stdout(&out));
}
