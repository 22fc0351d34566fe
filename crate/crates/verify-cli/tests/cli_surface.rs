//! End-to-end exercises of the command-line surface: subcommands, JSON
//! artifacts, and the documented exit codes (0 pass, 1 fail, 2
//! inconclusive, 3 usage).

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_double-supp"))
}

#[test]
fn build_writes_bundle_json() {
    let dir = std::env::temp_dir().join("double_supp_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("bundle.json");
    let status = bin()
        .args(["build", "--group", "ga", "--p", "3", "--r", "1", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["name"], "ga");
    assert_eq!(json["p"], 3);
    // round-trip through the loader
    let parsed: scheme_catalog::BundleJson = serde_json::from_str(&text).unwrap();
    let bundle = scheme_catalog::bundle_from_json(&parsed).unwrap();
    assert_eq!(bundle.kg.dim(), 3);
}

#[test]
fn pi_support_builtin_and_cloud_json() {
    let dir = std::env::temp_dir().join("double_supp_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("cloud.json");
    let status = bin()
        .args([
            "pi-support",
            "--group",
            "ga",
            "--p",
            "3",
            "--builtin",
            "trivial",
            "--emax",
            "1",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let cloud: support_lab::SupportCloud = serde_json::from_str(&text).unwrap();
    assert_eq!(cloud.len(), 4);
    assert_eq!(cloud.sweep, "linear");
    // byte-exact reproducibility of the artifact
    let out2 = dir.join("cloud2.json");
    bin()
        .args([
            "pi-support",
            "--group",
            "ga",
            "--p",
            "3",
            "--builtin",
            "trivial",
            "--emax",
            "1",
            "--out",
        ])
        .arg(&out2)
        .status()
        .unwrap();
    assert_eq!(text, std::fs::read_to_string(&out2).unwrap());
}

#[test]
fn verify_report_roundtrip_and_exit_codes() {
    let dir = std::env::temp_dir().join("double_supp_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let status = bin()
        .args([
            "verify", "hopf", "--group", "u", "--p", "3", "--format", "json", "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = bin()
        .args(["report", "--in"])
        .arg(&out)
        .args(["--format", "table"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}

#[test]
fn usage_errors_exit_3() {
    let status = bin().args(["verify", "hopf", "--no-such-flag"]).status().unwrap();
    assert_eq!(status.code(), Some(3));
    let status = bin().args(["frobnicate"]).status().unwrap();
    assert_eq!(status.code(), Some(3));
}

#[test]
fn unknown_group_is_an_error() {
    let status = bin()
        .args(["verify", "hopf", "--group", "e8", "--p", "3"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn inconclusive_exits_2() {
    // carlson with n_max too small to reach degree-2 products
    let status = bin()
        .args([
            "verify", "carlson", "--group", "ga", "--p", "3", "--nmax", "2",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn ext_subcommand_prints_betti() {
    let output = bin()
        .args(["ext", "--group", "ga", "--p", "3", "--nmax", "6"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("betti: [1, 2, 3, 4, 5, 6, 7]"));
}
