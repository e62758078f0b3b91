//! End-to-end checks of the binary surface: transforms round-trip
//! through files, the Lebesgue table carries its verdict, norm
//! estimation consumes operator files, and exit codes reflect failures.

use std::fs;
use std::process::Command;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_walshkit")
}

#[test]
fn wht_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("samples.txt");
    let coeffs = dir.path().join("coeffs.txt");
    let back = dir.path().join("back.txt");
    fs::write(&input, "# 8 samples\n1\n0.5\n-0.25\n2\n0\n1.5\n-1\n0.75\n").unwrap();

    let status = Command::new(exe())
        .args([
            "wht",
            input.to_str().unwrap(),
            "--order",
            "sequency",
            "--out",
        ])
        .arg(&coeffs)
        .status()
        .unwrap();
    assert!(status.success());

    let status = Command::new(exe())
        .args([
            "wht",
            coeffs.to_str().unwrap(),
            "--order",
            "sequency",
            "--inverse",
            "--out",
        ])
        .arg(&back)
        .status()
        .unwrap();
    assert!(status.success());

    let original: Vec<f64> = fs::read_to_string(&input)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.parse().unwrap())
        .collect();
    let recovered: Vec<f64> = fs::read_to_string(&back)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(original.len(), recovered.len());
    for (a, b) in original.iter().zip(&recovered) {
        assert!((a - b).abs() <= 1e-12);
    }
}

#[test]
fn wht_rejects_non_power_of_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "1\n2\n3\n").unwrap();
    let output = Command::new(exe())
        .args(["wht", input.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("power of two"));
}

#[test]
fn lebesgue_reports_the_exact_row() {
    let output = Command::new(exe())
        .args(["lebesgue", "--p", "4"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("3,3/2,1.5,3/2"), "{text}");
    assert!(text.lines().last().unwrap().contains("PASS"));
}

#[test]
fn norms_delta_on_l1_identity_gives_lebesgue_constant() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("l1_identity_16.json");
    let weights: Vec<String> = (0..16).map(|_| "0.0625".to_string()).collect();
    let matrix: Vec<String> = (0..16)
        .map(|i| {
            let row: Vec<String> = (0..16)
                .map(|j| if i == j { "1".into() } else { "0".into() })
                .collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    fs::write(
        &op,
        format!(
            "{{\"dims\":[16,16],\"domain\":{{\"norm\":\"l1_weighted\",\"weights\":[{}]}},\"codomain\":{{\"norm\":\"l1_weighted\",\"weights\":[{}]}},\"matrix\":[{}]}}",
            weights.join(","),
            weights.join(","),
            matrix.join(",")
        ),
    )
    .unwrap();

    let output = Command::new(exe())
        .args([
            "norms",
            "--op",
            op.to_str().unwrap(),
            "--mode",
            "delta",
            "--n",
            "5",
            "--q",
            "4",
            "--budget",
            "4",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let text = String::from_utf8(output.stdout).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // L_5 = 7/4 certified from both sides via the embedding witness.
    let lower = doc["lower"].as_f64().unwrap();
    let upper = doc["upper"].as_f64().unwrap();
    assert!((lower - 1.75).abs() <= 1e-9, "{text}");
    assert!((upper - 1.75).abs() <= 1e-9, "{text}");
    assert_eq!(doc["certified"], "exact");
}

#[test]
fn norms_on_shipped_euclidean_sample_is_exact() {
    // The sample operator file in data/ parses and yields the exact
    // spectral value in both delta and mu modes.
    let op = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/diag21_euclidean.json"
    );
    for (mode, extent) in [
        ("delta", ["--n", "3", "--q", "3"]),
        ("mu", ["--p", "3", "--q", "3"]),
    ] {
        let output = Command::new(exe())
            .args(["norms", "--op", op, "--mode", mode, "--format", "json"])
            .args(extent)
            .output()
            .unwrap();
        assert!(
            output.status.success(),
            "{}",
            String::from_utf8_lossy(&output.stderr)
        );
        let doc: serde_json::Value =
            serde_json::from_str(&String::from_utf8(output.stdout).unwrap()).unwrap();
        assert!(
            (doc["lower"].as_f64().unwrap() - 2.0).abs() <= 1e-9,
            "{mode}"
        );
        assert!(
            (doc["upper"].as_f64().unwrap() - 2.0).abs() <= 1e-9,
            "{mode}"
        );
        assert_eq!(doc["certified"], "exact", "{mode}");
    }
}

#[test]
fn norms_rejects_malformed_operator_files() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("broken.json");
    fs::write(&op, "{\"dims\": [2, 2], \"matrix\": []}").unwrap();
    let output = Command::new(exe())
        .args([
            "norms",
            "--op",
            op.to_str().unwrap(),
            "--mode",
            "delta",
            "--n",
            "1",
        ])
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("operator file"));
}

#[test]
fn verify_exit_status_reflects_unknown_suite() {
    let output = Command::new(exe())
        .args(["verify", "--suite", "nope"])
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown suite"));
}

#[test]
fn verify_text_report_has_pass_lines() {
    let output = Command::new(exe())
        .args(["verify", "--suite", "corollary3", "--p", "4"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("PASS embedded witness quotient equals L_n exactly, all n < 2^4"));
    assert!(text.trim_end().ends_with("result: PASS"));
}
