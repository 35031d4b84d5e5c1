use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

static NEXT: AtomicUsize = AtomicUsize::new(0);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_transversal"))
}

fn sessions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions")
}

fn run_text(text: &str, extra: &[&str]) -> Output {
    let dir = std::env::temp_dir().join(format!("transversal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("s{}.ses", NEXT.fetch_add(1, Ordering::SeqCst)));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    bin().arg("run").arg(&path).args(extra).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn bundled_sessions_run_cleanly() {
    for name in ["node.ses", "relation_type.ses", "artin_rees.ses"] {
        let out = bin().arg("run").arg(sessions().join(name)).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn node_json_report() {
    let out = bin().arg("run").arg(sessions().join("node.ses")).arg("--json").output().unwrap();
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["engine"]["name"], "transversal");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    assert_eq!(reports[0]["result"]["status"], "HOLDS_UP_TO_BOUND");
    assert_eq!(reports[1]["result"]["status"], "FAILS");
    assert_eq!(reports[2]["result"]["agree"], true);
    for r in reports {
        assert_eq!(r["inputs_fingerprint"].as_str().unwrap().len(), 64);
        assert!(r["wall_time_ms"].is_u64());
    }
}

#[test]
fn parse_errors_exit_with_one() {
    let out = run_text("ring A = QQ[x,y];\nideal I = (x^2, x*y);\nrun transversality I J;\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 22"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn command_errors_exit_with_one() {
    let out = run_text("ring A = QQ[x,y];\nideal I = (x + y^2);\nrun pi_iso I I;\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("command 1"));
}

#[test]
fn missing_file_exits_with_one() {
    let out = bin().args(["run", "/nonexistent/session.ses"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn failing_verdicts_still_exit_zero() {
    let out = run_text("ring B = QQ[z,t] / (z*t);\nideal I = (z);\nideal J = (t);\nrun pi_iso I J;\n", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAILS"));
}

#[test]
fn bound_flags_override_script_keys() {
    let text = "ring A = QQ[x,y];\nideal I = (x);\nideal J = (y);\nrun pi_iso I J pmax=3 qmax=3 dmax=8;\n";
    let out = run_text(text, &["--json", "--pmax", "1", "--dmax", "5", "--jobs", "3"]);
    assert!(out.status.success());
    let bounds = &json(&out)["reports"][0]["result"]["bounds"];
    assert_eq!(bounds["pmax"], 1);
    assert_eq!(bounds["qmax"], 3);
    assert_eq!(bounds["dmax"], 5);
}

#[test]
fn jobs_do_not_change_output() {
    let path = sessions().join("node.ses");
    let strip = |o: Output| -> String {
        String::from_utf8(o.stdout).unwrap().lines().filter(|l| !l.contains("wall_time_ms")).collect()
    };
    let one = bin().arg("run").arg(&path).args(["--json", "--jobs", "1"]).output().unwrap();
    let four = bin().arg("run").arg(&path).args(["--json", "--jobs", "4"]).output().unwrap();
    assert_eq!(strip(one), strip(four));
}

#[test]
fn empty_script_gives_no_reports() {
    let out = run_text("# nothing\n", &["--json"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["reports"], serde_json::json!([]));
}

#[test]
fn selftest_passes() {
    let out = bin().arg("selftest").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"));
    let out = bin().args(["selftest", "--json"]).output().unwrap();
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["cases"].as_array().unwrap().len() >= 9);
}
