//! End-to-end tests of the `trimer` binary: flag handling, exit codes,
//! output schemas and determinism.

use std::io::Write as _;
use std::process::{Command, Output};

fn trimer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trimer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn tc_prints_rounded_value_and_constant() {
    let out = trimer(&["tc", "--j-over-kb", "-20"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "T_c = 26.60 K (T_c/|J/k_B| = 1.329940)\n");

    let out = trimer(&["tc", "--j-over-kb", "-30.2"]);
    let text = stdout(&out);
    let value: f64 = text
        .strip_prefix("T_c = ")
        .and_then(|s| s.split(' ').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 40.2).abs() <= 0.1, "printed {text}");

    let out = trimer(&["tc", "--j-over-kb", "-1"]);
    assert!(stdout(&out).starts_with("T_c = 1.33 K"));
}

#[test]
fn tc_machine_formats() {
    let out = trimer(&["tc", "--j-over-kb", "-20", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "j_over_kb_K,tc_K,tc_over_abs_j");
    assert!(text.contains("-20,26.5988052,1.32994026"));

    let out = trimer(&["tc", "--j-over-kb", "-20", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((parsed["tc_K"].as_f64().unwrap() - 26.5988052).abs() < 1e-7);
}

#[test]
fn entanglement_single_point() {
    let out = trimer(&["entanglement", "--j-over-kb", "-20", "--temp", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "temperature_K,measure,entangled\n10,0.253038162,true\n");

    let out = trimer(&["entanglement", "--j-over-kb", "-20", "--temp", "30"]);
    assert!(stdout(&out).contains("30,0,false"));
}

#[test]
fn ferromagnetic_j_is_config_error() {
    let out = trimer(&["entanglement", "--j-over-kb", "5", "--temp", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("antiferromagnetic J < 0 required"));
}

#[test]
fn bad_grid_is_config_error() {
    let out = trimer(&[
        "sweep", "--j-over-kb", "-20", "--t-min", "0.1", "--t-max", "40", "--t-steps", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = trimer(&[
        "sweep", "--j-over-kb", "-20", "--t-min", "40", "--t-max", "0.1", "--t-steps", "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = trimer(&["tc", "--j-over-kb", "-20", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_output_is_deterministic_and_monotone() {
    let args = [
        "sweep", "--j-over-kb", "-20", "--t-min", "0.1", "--t-max", "40", "--t-steps", "400",
    ];
    let a = trimer(&args);
    let b = trimer(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same config must give byte-identical output");

    let text = stdout(&a);
    let mut prev = f64::INFINITY;
    let mut first = None;
    for line in text.lines().skip(1) {
        let m: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        if first.is_none() {
            first = Some(m);
        }
        assert!(m <= prev);
        prev = m;
    }
    assert!((first.unwrap() - 11.0 / 32.0).abs() < 1e-6);
    assert_eq!(prev, 0.0);
}

#[test]
fn susceptibility_single_and_curie_limit() {
    let out = trimer(&["susceptibility", "--j-over-kb", "-20", "--temp", "20"]);
    assert_eq!(stdout(&out), "temperature_K,chi_reduced\n20,0.495990044\n");

    let out = trimer(&["susceptibility", "--j-over-kb", "-20", "--temp", "20000000"]);
    let chi: f64 =
        stdout(&out).lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((chi - 0.75).abs() < 1e-5);
}

#[test]
fn susceptibility_oracle_column() {
    let out = trimer(&[
        "susceptibility", "--j-over-kb", "-20", "--t-min", "1", "--t-max", "100", "--t-steps",
        "40", "--oracle",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("temperature_K,chi_reduced,chi_oracle\n"));
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!((cols[1] - cols[2]).abs() < 2e-9, "closed vs oracle at T = {}", cols[0]);
    }
}

#[test]
fn oracle_compare_reports_divergence() {
    let out = trimer(&["oracle-compare", "--j-over-kb", "-20"]);
    let text = stdout(&out);
    assert!(text.contains("# closed_form_tc_K = 26.5988052"));
    assert!(text.contains("# oracle_lambda4_zero_K = 17.0723866"));
    // The cold row carries both measures: 11/32 chain vs 1/8 oracle.
    let first_row = text.lines().nth(3).unwrap();
    let cols: Vec<&str> = first_row.split(',').collect();
    let measure_chain: f64 = cols[10].parse().unwrap();
    let measure_oracle: f64 = cols[11].parse().unwrap();
    assert!((measure_chain - 0.34375).abs() < 1e-8);
    assert!((measure_oracle - 0.125).abs() < 1e-8);
}

#[test]
fn from_data_happy_path_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("chi.csv");
    let mut f = std::fs::File::create(&input).unwrap();
    writeln!(f, "T_K,chi").unwrap();
    for k in 0..200 {
        let t = 1.0 + k as f64 * 0.25;
        let model = trimer_core::TrimerModel::new(-20.0).unwrap();
        let chi = trimer_core::van_vleck_chi_reduced(&model, t).unwrap();
        writeln!(f, "{t},{chi}").unwrap();
    }
    drop(f);

    let output = dir.path().join("ent.csv");
    let out = trimer(&[
        "from-data", "--input", input.to_str().unwrap(), "--reduced", "--output",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&output).unwrap();
    assert!(written.contains("# estimated_tc_K = 26.7"), "got:\n{written}");
    assert!(written.contains("temperature_K,measure,entangled"));

    // Same command to stdout is byte-identical to the file content.
    let out2 = trimer(&["from-data", "--input", input.to_str().unwrap(), "--reduced"]);
    assert_eq!(stdout(&out2), written);
}

#[test]
fn from_data_missing_file_exits_4() {
    let out = trimer(&["from-data", "--input", "/no/such/chi.csv", "--reduced"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn from_data_parse_error_exits_3_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    std::fs::write(&input, "T_K,chi\nabc,1\n").unwrap();
    let out = trimer(&["from-data", "--input", input.to_str().unwrap(), "--reduced"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn from_data_json_format() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("chi.csv");
    std::fs::write(&input, "T_K,chi\n5,0.25\n10,0.6\n").unwrap();
    let out = trimer(&[
        "from-data", "--input", input.to_str().unwrap(), "--reduced", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["points"][0]["measure"].as_f64().unwrap(), 0.34375);
    assert_eq!(parsed["points"][1]["measure"].as_f64().unwrap(), 0.0);
    assert!(parsed["estimated_tc_K"].as_f64().is_some());
}

#[test]
fn reduced_conflicts_with_chi_scale() {
    let out = trimer(&[
        "from-data", "--input", "x.csv", "--reduced", "--chi-scale", "2.0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_4() {
    let out = trimer(&[
        "tc", "--j-over-kb", "-20", "--output", "/no/such/dir/tc.txt",
    ]);
    assert_eq!(out.status.code(), Some(4));
}
