//! The `braidrep` binary: exit codes, report files and exports.

use std::fs;
use std::process::Command;

fn braidrep(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args(args)
        .env_remove("BRAIDREP_CACHE_DIR")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn elliptic_suite_exits_zero() {
    let (code, stdout, _) = braidrep(&["check-elliptic", "--n", "2", "--K", "4"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("X1 Y2 = Y2 X1 T1 T1"));
    assert!(stdout.contains("orientation"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn odd_strand_count_is_vacuous() {
    let (code, stdout, _) = braidrep(&["check-elliptic", "--n", "3", "--K", "4"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("W is zero"));
}

#[test]
fn single_layer_run_exits_zero() {
    let (code, stdout, _) = braidrep(&["check-elliptic", "--n", "2", "--K", "0"]);
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn degeneration_reports_alpha() {
    for n in ["2", "3"] {
        let (code, stdout, _) = braidrep(&["check-degeneration", "--N", n, "--n", "2"]);
        assert_eq!(code, 0, "{stdout}");
        assert!(stdout.contains("alpha: 4*k^1"));
    }
}

#[test]
fn invalid_parameters_are_usage_errors() {
    for args in [
        &["check-degeneration", "--N", "1", "--n", "2"][..],
        &["check-degeneration", "--N", "2", "--n", "2", "--jet-order", "1"],
        &["check-elliptic", "--n", "0", "--K", "2"],
        &["check-elliptic", "--n", "2"],
        &["export", "--n", "2", "--K", "2", "--eval", "t=2"],
    ] {
        let (code, _, stderr) = braidrep(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
    }
}

#[test]
fn export_is_byte_stable_and_evaluates() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let (code, _, stderr) = braidrep(&[
            "export",
            "--n",
            "2",
            "--K",
            "2",
            "--eval",
            "s=2",
            "--out",
            d.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{stderr}");
    }
    let basis: serde_json::Value = serde_json::from_str(&fs::read_to_string(a.join("basis.json")).unwrap()).unwrap();
    assert_eq!(basis["vectors"]["cols"], 5);
    assert!(a.join("W_X1_at_s=2.json").exists());
    let mut names: Vec<_> = fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    for name in names {
        assert_eq!(
            fs::read(a.join(&name)).unwrap(),
            fs::read(b.join(&name)).unwrap(),
            "{name:?}"
        );
    }
}

#[test]
fn report_files_and_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let cache = dir.path().join("cache");
    for _ in 0..2 {
        let status = Command::new(env!("CARGO_BIN_EXE_braidrep"))
            .args([
                "check-elliptic",
                "--n",
                "2",
                "--K",
                "2",
                "--mode",
                "probabilistic-then-exact",
                "--out",
            ])
            .arg(&out)
            .env("BRAIDREP_CACHE_DIR", &cache)
            .output()
            .unwrap()
            .status;
        assert_eq!(status.code(), Some(0));
    }
    assert!(cache.join("basis_n2_K2.json").exists());
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert!(json[0]["title"].as_str().unwrap().starts_with("pre-screen"));
    assert!(json.as_array().unwrap().iter().all(|r| r["passed"] == true));
    assert!(fs::read_to_string(out.join("report.txt")).unwrap().contains("PASS"));
}
