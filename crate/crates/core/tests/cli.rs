use std::process::{Command, Output};

use zetalab::cli::{from_json_lines, read_csv, to_csv, to_json_lines, ParamValue};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetalab"))
        .args(args)
        .env_remove("ZETALAB_CACHE_DIR")
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_zeta_two() {
    let recs = from_json_lines(&stdout(&["eval", "--fn", "zeta", "--s", "2+0i"])).unwrap();
    assert_eq!(recs.len(), 1);
    assert!((recs[0].value.re - 1.644_934_066_848_226_4).abs() < 1e-10);
    assert!(recs[0].converged);
    assert_eq!(recs[0].meta.wall_ms, None);
}

#[test]
fn eval_regularized_at_complex_point() {
    let text = stdout(&[
        "eval",
        "--fn",
        "zeta-reg",
        "--cutoff",
        "exp",
        "--lambda",
        "0.3",
        "--s",
        "0.5+14.1i",
    ]);
    let r = &from_json_lines(&text).unwrap()[0];
    assert!(r.converged && r.value.re.is_finite() && r.value.im.is_finite());
    assert!(matches!(r.input.get("lambda"), Some(ParamValue::Real(v)) if *v == 0.3));
}

#[test]
fn exit_code_contract() {
    assert_eq!(code(&["eval", "--fn", "zeta", "--s", "1+0i"]), 2);
    let out = run(&["eval", "--fn", "zeta", "--s", "1+0i"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));
    assert_eq!(code(&["eval", "--fn", "zeta"]), 1);
    assert_eq!(
        code(&["eval", "--fn", "zeta", "--s", "2+0i", "--lambda", "1"]),
        1
    );
    assert_eq!(code(&["eval", "--fn", "zeta", "--s", "two"]), 1);
    assert_eq!(code(&["eval", "--fn", "nope"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["scan", "--t", "40:10"]), 1);
    assert_eq!(
        code(&[
            "verify",
            "--kind",
            "generic-h",
            "--cutoff",
            "custom:asymmetric"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "--out",
            "/nonexistent/dir/out.json",
            "eval",
            "--fn",
            "zeta",
            "--s",
            "2"
        ]),
        4
    );
    // a deliberately wrong identity: the printed α = 1/4 prefactor fails the default threshold
    assert_eq!(
        code(&[
            "verify",
            "--kind",
            "quarter-alpha",
            "--lambda",
            "0.8",
            "--s",
            "0.3"
        ]),
        5
    );
    assert_eq!(
        code(&[
            "verify",
            "--kind",
            "quarter-alpha",
            "--lambda",
            "0.8",
            "--s",
            "0.3",
            "--threshold",
            "2"
        ]),
        0
    );
}

#[test]
fn usage_errors_name_the_flag() {
    let out = run(&["eval", "--fn", "zeta", "--s", "2+0i", "--lambda", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));
}

#[test]
fn verify_grid_and_single_point() {
    let out = run(&[
        "verify",
        "--kind",
        "exp-symmetric",
        "--lambda",
        "0.2,1,3",
        "--s-grid",
        "strip-default",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let recs = from_json_lines(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(recs.len(), 45);
    let worst = recs
        .iter()
        .map(|r| r.residuals.as_ref().unwrap()["rel_residual"])
        .fold(0.0, f64::max);
    assert!(worst < 1e-8);
    assert!(String::from_utf8_lossy(&out.stderr).contains("max relative residual"));

    let recs = from_json_lines(&stdout(&[
        "verify",
        "--kind",
        "two-param",
        "--lambda1",
        "1",
        "--lambda2",
        "0.7",
        "--s",
        "0.6",
    ]))
    .unwrap();
    assert_eq!(recs.len(), 1);
}

#[test]
fn scan_rows() {
    let (header, rows) = read_csv(&stdout(&[
        "--format", "csv", "scan", "--t", "10:40", "--step", "0.05",
    ]))
    .unwrap();
    assert_eq!(header, ["t_lo", "t_hi", "refined_t", "abs_z"]);
    assert_eq!(rows.len(), 6);
    let first: f64 = rows[0][2].parse().unwrap();
    assert!((first - 14.1347).abs() < 1e-4);
    let (_, rows) = read_csv(&stdout(&[
        "--format", "csv", "scan", "--t", "0:10", "--step", "0.05",
    ]))
    .unwrap();
    assert!(rows.is_empty());
}

fn grid_args(format: &str) -> Vec<String> {
    [
        "--format", format, "grid", "--fn", "zeta-reg", "--cutoff", "exp", "--sigma", "0:1:0.1",
        "--s-im", "14.1", "--lambda", "0.1,1",
    ]
    .map(String::from)
    .to_vec()
}

#[test]
fn grid_cardinality_order_and_determinism() {
    let args = grid_args("csv");
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert!(!first.contains('\r'));
    let (header, rows) = read_csv(&first).unwrap();
    assert_eq!(rows.len(), 22);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    // lambda is the slower axis, sigma the faster one
    let keys: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            (
                r[col("lambda")].parse().unwrap(),
                r[col("s_re")].parse().unwrap(),
            )
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(keys[10], (0.1, 1.0));

    let json = grid_args("json");
    let json: Vec<&str> = json.iter().map(String::as_str).collect();
    assert_eq!(stdout(&json), stdout(&json));
}

#[test]
fn json_and_csv_round_trip() {
    let args = grid_args("json");
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let text = stdout(&args);
    let recs = from_json_lines(&text).unwrap();
    assert_eq!(to_json_lines(&recs), text);

    let csv = to_csv(&recs).unwrap();
    let (header, rows) = read_csv(&csv).unwrap();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    for (rec, row) in recs.iter().zip(&rows) {
        let re: f64 = row[col("value_re")].parse().unwrap();
        let im: f64 = row[col("value_im")].parse().unwrap();
        assert_eq!(re.to_bits(), rec.value.re.to_bits());
        assert_eq!(im.to_bits(), rec.value.im.to_bits());
    }
    let cli_csv = {
        let a = grid_args("csv");
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        stdout(&a)
    };
    assert_eq!(cli_csv, csv);
}

#[test]
fn cache_serves_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["--cache-dir".to_string(), dir.path().display().to_string()];
    args.extend(grid_args("json"));
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let cold = stdout(&args);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 22);
    let warm = stdout(&args);
    assert_eq!(cold, warm);

    // the environment variable is honoured and the flag wins over it
    let other = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_zetalab"))
        .args(["eval", "--fn", "zeta", "--s", "3"])
        .env("ZETALAB_CACHE_DIR", other.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(other.path()).unwrap().count(), 1);
}

#[test]
fn omega_column_is_symmetric_about_one_half() {
    let text = stdout(&[
        "--format",
        "csv",
        "grid",
        "--fn",
        "omega",
        "--lambda",
        "0.5",
        "--sigma",
        "-1:2:0.25",
        "--s-im",
        "14.1",
    ]);
    let (header, rows) = read_csv(&text).unwrap();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let vals: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            (
                r[col("value_re")].parse().unwrap(),
                r[col("value_im")].parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(vals.len(), 13);
    let scale = vals.iter().map(|v| v.0.hypot(v.1)).fold(0.0, f64::max);
    for k in 0..vals.len() {
        let (a, b) = (vals[k], vals[vals.len() - 1 - k]);
        // Ω(1 - s̄) = conj Ω(s) along Im s = 14.1
        assert!((a.0 - b.0).abs() < 1e-8 * scale, "{k}");
        assert!((a.1 + b.1).abs() < 1e-8 * scale, "{k}");
    }
}

#[test]
fn timing_is_opt_in() {
    let text = stdout(&["--timing", "eval", "--fn", "theta", "--x", "1"]);
    let r = &from_json_lines(&text).unwrap()[0];
    assert!(r.meta.wall_ms.is_some());
}
