use qverify::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qverify").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn without_wall_time(mut v: Value) -> Value {
    for r in v.as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("wall_ms");
    }
    v
}

#[test]
fn list_has_the_whole_catalog() {
    let (code, out, _) = cli(&["list"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.lines().count() >= 40);
    assert!(out.contains("jacobi_id"));
}

#[test]
fn list_json_is_an_array() {
    let (code, out, _) = cli(&["list", "--json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.len() >= 40);
    assert!(rows.iter().all(|r| !r["quote"].as_str().unwrap().is_empty()));
}

#[test]
fn list_filter_selects_by_glob() {
    let (_, out, _) = cli(&["list", "--filter", "mseq*"]);
    let ids: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.starts_with("mseq")), "{ids:?}");
}

#[test]
fn check_passes_with_exit_zero() {
    let (code, out, _) = cli(&["check", "jacobi_id", "--order", "30"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let (code, out, _) = cli(&["check", "q_gauss", "--precision", "60", "--tol", "1e-20"]);
    assert_eq!(code, EXIT_PASS, "{out}");
}

#[test]
fn check_domain_violation_exits_two() {
    let (code, _, err) = cli(&["check", "c33", "--k", "3", "--j", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("j+k even"), "{err}");
    let (code, _, err) = cli(&["check", "q_gauss", "--backend", "numeric", "--c", "5/4", "--a", "1", "--b", "1"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
}

#[test]
fn check_with_explicit_params() {
    let (code, out, err) = cli(&["check", "c33", "-p", "k=3", "-p", "j=1", "--order", "15"]);
    assert_eq!(code, EXIT_PASS, "{out}{err}");
    assert!(out.contains("j=1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["check", "no_such_identity"]).0, EXIT_USAGE);
    assert_eq!(cli(&["suite", "--order", "4"]).0, EXIT_USAGE);
    assert_eq!(cli(&["suite", "--precision", "20"]).0, EXIT_USAGE);
    assert_eq!(cli(&["suite", "--tol", "1e-50"]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_PASS);
}

#[test]
fn injected_fault_fails_and_names_the_entry() {
    let (code, out, _) = cli(&["suite", "--filter", "mnk*", "--inject-fault", "mnkqid"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("failing: mnkqid"), "{out}");
}

#[test]
fn bailey_filter_and_report_fields() {
    let (code, out, _) = cli(&["suite", "--filter", "b*", "--json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r["id"].as_str().unwrap().starts_with('b'));
        for key in ["backend", "order_or_precision", "params", "verdict", "discrepancy", "wall_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn json_is_deterministic_apart_from_wall_time() {
    let args = ["suite", "--filter", "mseq1*", "--json", "--random", "3", "--seed", "11"];
    let (_, a, _) = cli(&args);
    let (_, b, _) = cli(&["--parallelism", "1"].iter().chain(&args).copied().collect::<Vec<_>>());
    let a: Value = serde_json::from_str(&a).unwrap();
    let b: Value = serde_json::from_str(&b).unwrap();
    assert_eq!(without_wall_time(a), without_wall_time(b));
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.json");
    std::fs::write(&path, r#"{"order": 12, "filter": "jacobi_id", "format": "json"}"#).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["suite", "--config", p]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["order_or_precision"], 12);
    let (_, out, _) = cli(&["suite", "--config", p, "--order", "20"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["order_or_precision"], 20);

    std::fs::write(&path, r#"{"order": 3}"#).unwrap();
    assert_eq!(cli(&["suite", "--config", p]).0, EXIT_USAGE);
    std::fs::write(&path, r#"{"bogus": 1}"#).unwrap();
    assert_eq!(cli(&["suite", "--config", p]).0, EXIT_USAGE);
}
