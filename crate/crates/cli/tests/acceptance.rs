//! Acceptance: determinism of the verification reports. Two runs with
//! identical parameters (including the seed) must be byte-identical,
//! at the library level and through the binary.

use std::fs;
use std::process::Command;

use walshkit::verify::SuiteParams;
use walshkit_cli::{run_verify, OutputFormat};

#[test]
fn criterion_10_verify_reports_are_byte_identical() {
    let params = SuiteParams {
        q: 5,
        p: 3,
        seed: 42,
        tol: 1e-9,
        budget: 16,
    };
    for suite in [
        "identities",
        "kernels",
        "theorem",
        "corollary3",
        "convergence",
    ] {
        for format in [
            OutputFormat::Text,
            OutputFormat::Csv,
            OutputFormat::Json,
            OutputFormat::PlotData,
        ] {
            let a = run_verify(suite, &params, format).unwrap();
            let b = run_verify(suite, &params, format).unwrap();
            assert_eq!(a.text.as_bytes(), b.text.as_bytes(), "suite {suite}");
            assert!(a.ok, "suite {suite} failed:\n{}", a.text);
        }
    }
    println!("criterion 10 PASS: verify reports byte-identical across runs (library)");
}

#[test]
fn criterion_10_binary_runs_are_byte_identical() {
    // Identical invocations, and also different worker-thread counts:
    // the searches reduce deterministically, so the schedule must not
    // leak into the report.
    let exe = env!("CARGO_BIN_EXE_walshkit");
    let dir = tempfile::tempdir().unwrap();
    let outputs: Vec<Vec<u8>> = ["1", "2", "0", "0"]
        .iter()
        .enumerate()
        .map(|(i, threads)| {
            let out = dir.path().join(format!("report_{i}.json"));
            let mut cmd = Command::new(exe);
            cmd.args([
                "verify", "--suite", "theorem", "--p", "3", "--seed", "7", "--budget", "8",
                "--format", "json", "--out",
            ])
            .arg(&out);
            if *threads != "0" {
                cmd.env("RAYON_NUM_THREADS", threads);
            }
            let status = cmd.status().expect("binary runs");
            assert!(status.success());
            fs::read(&out).unwrap()
        })
        .collect();
    for other in &outputs[1..] {
        assert_eq!(&outputs[0], other);
    }
    println!("criterion 10 PASS: verify reports byte-identical across runs and thread counts");
}
