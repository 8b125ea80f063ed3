use coherence_spectra::cli::{run, EXIT_CONFIG, EXIT_OK, EXIT_SOLVER};
use coherence_spectra::SpectrumTable;

fn args(list: &[&str]) -> Vec<String> {
    std::iter::once("coherence-spectra")
        .chain(list.iter().copied())
        .map(String::from)
        .collect()
}

#[test]
fn scan_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let out_s = out.to_str().unwrap();
    let code = run(args(&[
        "scan",
        "--fg",
        "2",
        "--fe",
        "1",
        "--range",
        "-0.01,0.01",
        "--points",
        "101",
        "--observables",
        "absorption,dispersion",
        "-o",
        out_s,
    ]));
    assert_eq!(code, EXIT_OK);
    let t = SpectrumTable::load(&out).unwrap();
    assert_eq!(t.columns, vec!["absorption", "dispersion"]);
    assert_eq!(t.len(), 101);
    assert_eq!(run(args(&["analyze", out_s])), EXIT_OK);
    assert_eq!(
        run(args(&[
            "analyze",
            out_s,
            "--column",
            "absorption",
            "--window",
            "-0.005,0.005",
            "--json"
        ])),
        EXIT_OK
    );
    assert_eq!(
        run(args(&["analyze", out_s, "--column", "missing"])),
        EXIT_CONFIG
    );
}

#[test]
fn config_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    let out = dir.path().join("b.csv");
    std::fs::write(
        &cfg,
        r#"{"transition": {"fg": 3, "fe": 4}, "pump": {"rabi": 0.3, "polarization": "lin_x"},
            "probe": {"rabi": 1, "polarization": "lin_x"}, "delta": 0.034, "scan": "bfield",
            "range": [-0.03, 0.03], "points": 21, "observables": ["fluorescence_mod"]}"#,
    )
    .unwrap();
    let code = run(args(&[
        "scan",
        "--config",
        cfg.to_str().unwrap(),
        "--points",
        "11",
        "-o",
        out.to_str().unwrap(),
    ]));
    assert_eq!(code, EXIT_OK);
    let t = SpectrumTable::load(&out).unwrap();
    assert_eq!(t.scan_variable, "bfield");
    assert_eq!(t.len(), 11);
}

#[test]
fn invalid_inputs_exit_with_config_code() {
    assert_eq!(run(args(&["scan", "--range", "1,-1"])), EXIT_CONFIG);
    assert_eq!(run(args(&["scan", "--pump-pol", "diagonal"])), EXIT_CONFIG);
    assert_eq!(run(args(&["scan", "--fg", "1", "--fe", "3"])), EXIT_CONFIG);
    assert_eq!(
        run(args(&["scan", "--observables", "absorption,colour"])),
        EXIT_CONFIG
    );
    assert_eq!(
        run(args(&["scan", "--config", "/nonexistent/config.json"])),
        EXIT_CONFIG
    );
    assert_eq!(
        run(args(&["analyze", "/nonexistent/table.csv"])),
        EXIT_CONFIG
    );
    assert_eq!(run(args(&["frobnicate"])), EXIT_CONFIG);
}

#[test]
fn solver_failure_exits_with_solver_code() {
    let code = run(args(&[
        "scan",
        "--gamma",
        "3e-7",
        "--pump-rabi",
        "3",
        "--points",
        "2",
        "--print-config",
    ]));
    assert_eq!(code, EXIT_OK);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let code = run(args(&[
        "scan",
        "--gamma",
        "3e-7",
        "--pump-rabi",
        "3",
        "--points",
        "2",
        "-o",
        out.to_str().unwrap(),
    ]));
    assert_eq!(code, EXIT_SOLVER);
}

#[test]
fn quick_validation_passes() {
    assert_eq!(run(args(&["validate", "--quick"])), EXIT_OK);
}

#[test]
fn help_is_not_an_error() {
    assert_eq!(run(args(&["--help"])), EXIT_OK);
}
