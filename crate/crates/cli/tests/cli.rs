//! CLI surface: dispatch, persistence, plotting errors, exit codes.

use kawahara_lab::config::{parse_config, ExperimentConfig, ExperimentKind};
use kawahara_lab::plot::{emit_plot, PlotKind};
use kawahara_lab::run::{run, RunError};
use std::process::Command;

#[test]
fn solve_with_zero_data_writes_zero_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = parse_config("data = zero\nl = 8pi\nm = 64\ndt = 1e-3\nt = 0.01\nstore_every = 5\n")
        .unwrap();
    let manifest = run(ExperimentKind::Solve, &cfg, dir.path(), None, false).unwrap();
    assert!(matches!(
        manifest.status,
        kawahara_lab::manifest::Status::Completed
    ));
    let text = std::fs::read_to_string(dir.path().join("trajectory.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,k,xi,re,im");
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[3], "0.000000000000e+00");
        assert_eq!(cols[4], "0.000000000000e+00");
    }
}

#[test]
fn reruns_are_byte_identical() {
    let cfg =
        parse_config("data = rough\nl = 8pi\nm = 64\nk_max = 3\ndt = 1e-3\nt = 0.01\nseed = 9\n")
            .unwrap();
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run(ExperimentKind::Solve, &cfg, a.path(), None, false).unwrap();
    run(ExperimentKind::Solve, &cfg, b.path(), None, false).unwrap();
    let bytes_a = std::fs::read(a.path().join("trajectory.csv")).unwrap();
    let bytes_b = std::fs::read(b.path().join("trajectory.csv")).unwrap();
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn counterexample_emits_one_slope_row_per_s() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig {
        s_values: vec![-1.0, -0.5, 0.0, 0.5],
        n_values: Some(vec![16.0, 32.0, 64.0, 128.0]),
        density: 8,
        ..Default::default()
    };
    run(
        ExperimentKind::Counterexample,
        &cfg,
        dir.path(),
        None,
        false,
    )
    .unwrap();
    let table = std::fs::read_to_string(dir.path().join("slope_table.csv")).unwrap();
    assert_eq!(table.lines().count(), 1 + 4);
    let points = std::fs::read_to_string(dir.path().join("scan_points.csv")).unwrap();
    assert_eq!(points.lines().count(), 1 + 4 * 4);
}

#[test]
fn validation_failure_is_fail_fast() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never");
    let cfg = parse_config("alpha = 0\n").unwrap();
    match run(ExperimentKind::Solve, &cfg, &out, None, false) {
        Err(RunError::Validation(msg)) => assert!(msg.contains("alpha")),
        other => panic!("expected validation error, got {:?}", other.map(|_| ())),
    }
    // nothing was created
    assert!(!out.exists());
}

#[test]
fn plot_rejects_empty_and_mismatched_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "N,error\n").unwrap();
    let err = emit_plot(&empty, PlotKind::LadderDecay).unwrap_err();
    assert!(err.0.contains("no rows"), "{}", err.0);

    let wrong = dir.path().join("wrong.csv");
    std::fs::write(&wrong, "a,b\n1,2\n").unwrap();
    let err = emit_plot(&wrong, PlotKind::LadderDecay).unwrap_err();
    assert!(err.0.contains("expected"), "{}", err.0);
    assert!(err.0.contains("N,error"), "{}", err.0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kawahara-lab");
    let dir = tempfile::tempdir().unwrap();

    // validation error -> exit 1
    let cfg_bad = dir.path().join("bad.cfg");
    std::fs::write(&cfg_bad, "alpha = 0\n").unwrap();
    let out = Command::new(bin)
        .args([
            "solve",
            "--config",
            cfg_bad.to_str().unwrap(),
            "--out",
            dir.path().join("o1").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // successful tiny run -> exit 0
    let cfg_ok = dir.path().join("ok.cfg");
    std::fs::write(
        &cfg_ok,
        "data = zero\nl = 8pi\nm = 64\ndt = 1e-3\nt = 0.005\n",
    )
    .unwrap();
    let out = Command::new(bin)
        .args([
            "solve",
            "--config",
            cfg_ok.to_str().unwrap(),
            "--out",
            dir.path().join("o2").to_str().unwrap(),
            "--threads",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("trajectory.csv"));
}
