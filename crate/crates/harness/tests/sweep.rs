use chebgamma_harness::sweep::{evaluate, AxisName, Format, SweepMode, MAX_POINTS};
use chebgamma_harness::{parse_config, run_sweep, SweepError};

fn integer_grid(output: &str) -> String {
    format!(
        "# integer k terminates\n\
         a_pi = 5, 12\n\
         k = 1, 3\n\
         alpha = 0.3, -0.7\n\
         beta = 0.1, 0.25+0.5i\n\
         policy = exact\n\
         output = {output}\n"
    )
}

fn config_line(text: &str) -> (usize, String) {
    match parse_config(text).unwrap_err() {
        SweepError::Config { line, field, .. } => (line, field),
        e => panic!("expected a config error, got {e}"),
    }
}

#[test]
fn integer_grid_agrees_row_by_row() {
    let cfg = parse_config(&integer_grid("out.csv")).unwrap();
    assert_eq!(cfg.points(), 16);
    assert_eq!(cfg.mode, SweepMode::Both);
    assert_eq!(cfg.format, Format::Csv);
    assert_eq!(cfg.tolerance, 1e-9);
    let names: Vec<_> = cfg.axes.iter().map(|a| a.name).collect();
    assert_eq!(
        names,
        [AxisName::APi, AxisName::K, AxisName::Alpha, AxisName::Beta]
    );
    let rows = evaluate(&cfg);
    assert_eq!(rows.len(), 16);
    for r in &rows {
        assert_eq!(r.status, "pass", "{r:?}");
        assert!(r.rel_diff.unwrap() <= 1e-9);
        assert!(r.series_re.is_some() && r.closed_re.is_some());
    }
    // first declared axis varies slowest, last fastest
    let pi = std::f64::consts::PI;
    assert!((rows[0].a_re * pi - 5.0).abs() < 1e-14);
    assert!((rows[15].a_re * pi - 12.0).abs() < 1e-14);
    assert_eq!(
        (rows[0].beta_re, rows[1].beta_re, rows[1].beta_im),
        (0.1, 0.25, 0.5)
    );
    assert_eq!((rows[1].alpha_re, rows[2].alpha_re), (0.3, -0.7));
    assert_eq!((rows[3].k_re, rows[4].k_re), (1.0, 3.0));
}

#[test]
fn singular_points_are_skipped_not_fatal() {
    let text = "a = 2\nk = 0.5\nalpha = 0.3\nbeta = 0.3, 0.2\noutput = x.csv\n";
    let rows = evaluate(&parse_config(text).unwrap());
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].status, "skipped-with-warning");
    assert!(rows[0].closed_re.is_none() && rows[0].series_re.is_some());
    assert!(rows[0].warnings.contains("closed:"));
    assert_ne!(rows[1].status, "skipped-with-warning");
}

#[test]
fn config_errors_carry_line_and_field() {
    assert_eq!(config_line("a = 1\nk =\n"), (2, "k".into()));
    assert_eq!(
        config_line("a = 1\n\n# c\ncolour = red\n"),
        (4, "colour".into())
    );
    assert_eq!(config_line("a = 1\na = 2\n"), (2, "a".into()));
    assert_eq!(config_line("a = 1, 2x\n"), (1, "a".into()));
    assert_eq!(config_line("a = 1\nmode = fast\n"), (2, "mode".into()));
    assert_eq!(
        config_line("a = 1\ntolerance = -1\n"),
        (2, "tolerance".into())
    );
    assert_eq!(config_line("a 1\n"), (1, "a 1".into()));
    for text in [
        "k = 1\nalpha = 0\nbeta = 0\noutput = o\n",
        "a = 1\na_pi = 1\nk = 1\nalpha = 0\nbeta = 0\noutput = o\n",
        "a = 1\nk = 1\nalpha = 0\nbeta = 0\n",
        "a = 1\nk = 1\nalpha = 0\noutput = o\n",
    ] {
        assert!(
            matches!(parse_config(text), Err(SweepError::Missing(_))),
            "{text}"
        );
    }
}

#[test]
fn oversized_grids_are_rejected() {
    let axis = (0..101)
        .map(|i| format!("{}", i + 1))
        .collect::<Vec<_>>()
        .join(",");
    let text = format!("a = {axis}\nk = {axis}\nalpha = {axis}\nbeta = 0\noutput = o\n");
    match parse_config(&text) {
        Err(SweepError::Missing(m)) => assert!(m.contains(&MAX_POINTS.to_string())),
        other => panic!("{other:?}"),
    }
}

#[test]
fn csv_and_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("grid.csv");
    let cfg = parse_config(&integer_grid(csv_path.to_str().unwrap())).unwrap();
    let summary = run_sweep(&cfg).unwrap();
    assert_eq!(
        (summary.points, summary.skipped, summary.failures),
        (16, 0, 0)
    );
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<_> = reader
        .headers()
        .unwrap()
        .iter()
        .map(str::to_string)
        .collect();
    assert_eq!(header.first().map(String::as_str), Some("a_re"));
    assert_eq!(header.last().map(String::as_str), Some("status"));
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 16);
    let rows = evaluate(&cfg);
    for (rec, row) in records.iter().zip(&rows) {
        assert_eq!(rec[2].parse::<f64>().unwrap(), row.k_re);
        assert_eq!(rec[8].parse::<f64>().unwrap(), row.series_re.unwrap());
        assert_eq!(&rec[15], "pass");
    }

    let json_path = dir.path().join("grid.json");
    let text = integer_grid(json_path.to_str().unwrap())
        .replace("policy = exact", "policy = exact\nmode = series");
    let cfg = parse_config(&text).unwrap();
    assert_eq!(cfg.format, Format::Json);
    run_sweep(&cfg).unwrap();
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let arr = value.as_array().unwrap();
    assert_eq!(arr.len(), 16);
    assert!(arr
        .iter()
        .all(|r| r["closed_re"].is_null() && r["rel_diff"].is_null() && r["status"] == "pass"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let cfg = parse_config(&integer_grid(path.to_str().unwrap())).unwrap();
    assert!(matches!(run_sweep(&cfg), Err(SweepError::Io { .. })));
}
