use std::process::{Command, Output};

use powerlap::closed_form::{laplacian_spectrum_z2r4s, laplacian_spectrum_zpmn, ZpmnParams};
use powerlap::Spectrum;
use serde_json::Value;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_powerlap"));
    cmd.args(args).env_remove("ORACLE_CAP").env_remove("ENUM_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn spec(pairs: &[(u64, u64)]) -> Spectrum {
    Spectrum::from_pairs(pairs.iter().copied())
}

fn json_spectrum(v: &Value) -> Spectrum {
    serde_json::from_value(v["spectrum"].clone()).unwrap()
}

#[test]
fn spectrum_examples() {
    let v = json(&["spectrum", "--pmn", "2,2,2"]);
    assert_eq!(
        json_spectrum(&v),
        spec(&[(0, 1), (1, 2), (2, 3), (4, 6), (6, 3), (16, 1)])
    );
    assert_eq!(v["vertices"], "16");
    assert_eq!(v["edges"], "33");

    let v = json(&["spectrum", "--group", "Z8"]);
    assert_eq!(json_spectrum(&v), spec(&[(0, 1), (8, 7)]));
    let dropped: Vec<&str> = v["dropped"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["eigenvalue"].as_str().unwrap())
        .collect();
    assert_eq!(dropped, ["1", "2", "4"]);

    let v = json(&["spectrum", "--rs", "1,1"]);
    assert_eq!(
        json_spectrum(&v),
        spec(&[(0, 1), (1, 2), (2, 1), (4, 2), (6, 1), (8, 1)])
    );
    assert_eq!(v["route"], "closed_form_rs");
}

#[test]
fn spectrum_falls_back_to_oracle() {
    let v = json(&["spectrum", "--group", "Z6"]);
    assert_eq!(v["route"], "oracle");
    assert_eq!(json_spectrum(&v).total_multiplicity(), 6u32.into());
    // Out of family and beyond the cap.
    assert_eq!(run(&["spectrum", "--group", "Z6 x Z10 x Z7"]).status.code(), Some(2));
    assert_eq!(
        run_env(&["spectrum", "--group", "Z6"], &[("ORACLE_CAP", "5")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["spectrum", "--group", "Z6", "--oracle-cap", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["spectrum", "--group", "Z2 x"][..],
        &["spectrum", "--pmn", "4,1,1"],
        &["spectrum", "--pmn", "2,2"],
        &["spectrum", "--rs", "1,0"],
        &["spectrum", "--pmn", "2,2,2", "--rs", "1,1"],
        &["spectrum"],
        &["spectrum", "--pmn", "2,2,2", "--format", "xml"],
        &["structure", "--pmn", "2,0,1"],
        &["classify", "--group", "Z1"],
        &["counts", "--rs", "x"],
        &["table", "--pmn-grid", "p=2..3,m=1..2"],
        &["table"],
        &["verify", "--all-rs", "r<=2"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(
        run_env(&["spectrum", "--pmn", "2,2,2"], &[("ENUM_CAP", "lots")])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn structure_examples() {
    assert_eq!(ok(&["structure", "--pmn", "3,1,2", "--format", "plain"]), "K1 + 4*K2\n");
    assert_eq!(
        ok(&["structure", "--rs", "2,1", "--format", "plain"]),
        "K1 + (6*K1 u 1*(K1 + 4*K2))\n"
    );
    assert_eq!(
        ok(&["structure", "--pmn", "2,2,1", "--format", "plain"]),
        "K1 + 1*(K1 + 1*K2)\n"
    );
    let v = json(&["structure", "--pmn", "3,1,2"]);
    assert_eq!(v["expression"], "K1 + 4*K2");
    assert_eq!(v["vertices"], "9");
    assert_eq!(v["edges"], "12");
}

#[test]
fn verify_examples_and_exit_codes() {
    let v = json(&["verify", "--pmn", "2,2,2"]);
    assert_eq!(v["summary"]["passed"], 1);
    assert_eq!(v["reports"][0]["status"], "PASS");
    assert!(v["reports"][0]["spectra"].as_array().unwrap().len() >= 3);

    let v = json(&["verify", "--rs", "0,1"]);
    let routes: Vec<&str> = v["reports"][0]["spectra"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["route"].as_str().unwrap())
        .collect();
    assert!(routes.contains(&"closed_form_pmn") && routes.contains(&"closed_form_rs"));

    let v = json(&["verify", "--group", "Z6"]);
    let spectra = v["reports"][0]["spectra"].as_array().unwrap();
    assert_eq!(spectra.len(), 1);
    assert_eq!(spectra[0]["route"], "oracle");

    // No route applies: not a pass.
    let out = run(&["verify", "--group", "Z1000"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reports"][0]["status"], "INCONCLUSIVE");
}

#[test]
fn verify_grids() {
    let v = json(&["verify", "--all-pmn", "p<=5,m<=3,n<=3,ordercap=300"]);
    assert_eq!(v["summary"]["total"], 19);
    assert_eq!(v["summary"]["passed"], 19);
    let v = json(&["verify", "--all-rs", "r<=3,s<=2,ordercap=128"]);
    assert_eq!(v["summary"]["passed"], v["summary"]["total"]);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.get("elapsed_ms").is_none()));
    let v = json(&["verify", "--pmn", "2,1,2", "--timing"]);
    assert!(v["reports"][0]["elapsed_ms"].is_u64());
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--group", "Z8"]);
    assert_eq!(
        (v["complete"].as_str(), v["planar"].as_str()),
        (Some("yes"), Some("no"))
    );
    assert_eq!(v["spectrum_containment"], "no");
    let v = json(&["classify", "--pmn", "3,1,2"]);
    assert_eq!(
        (v["flower"].as_str(), v["complete"].as_str()),
        (Some("yes"), Some("no"))
    );
    let v = json(&["classify", "--group", "Z2^2 x Z4"]);
    assert_eq!(v["planar"], "yes");
    assert_eq!(v["flower"], "n/a");
    // The power graph of Z30 is not Laplacian integral.
    let v = json(&["classify", "--group", "Z2 x Z3 x Z5"]);
    assert_eq!(v["laplacian_integral"], "no");
    assert_eq!(v["spectrum_containment"], "n/a");
    assert_eq!(run(&["spectrum", "--group", "Z30"]).status.code(), Some(2));
    let v = json(&["classify", "--group", "Z6 x Z10 x Z7"]);
    assert_eq!(v["laplacian_integral"], "n/a");
    assert_eq!(v["spectrum_containment"], "n/a");
}

#[test]
fn counts_examples() {
    let get = |v: &Value, q: &str, field: &str| -> String {
        let rows = v["rows"].as_array().unwrap();
        let row = rows.iter().find(|r| r["quantity"] == q).unwrap();
        row[field].as_str().unwrap().to_string()
    };
    let v = json(&["counts", "--rs", "1,1"]);
    assert_eq!(get(&v, "order2", "formula"), "3");
    assert_eq!(get(&v, "order4", "formula"), "4");
    assert_eq!(get(&v, "deg1", "enumerated"), "2");
    assert_eq!(get(&v, "degBig", "enumerated"), "1");
    assert_eq!(v["all_matched"], true);
    let v = json(&["counts", "--rs", "2,2"]);
    assert_eq!(
        (get(&v, "order2", "enumerated"), get(&v, "order4", "enumerated")),
        ("15".into(), "48".into())
    );
    let v = json(&["counts", "--rs", "0,1"]);
    assert_eq!(
        (get(&v, "deg1", "formula"), get(&v, "degBig", "formula")),
        ("0".into(), "1".into())
    );
    let v = json(&["counts", "--rs", "9,9"]);
    assert!(v["all_matched"].is_null());
}

#[test]
fn table_examples() {
    let csv_text = ok(&["table", "--pmn-grid", "p=2..3,m=1..2,n=1..2", "--format", "csv"]);
    assert_eq!(csv_text.lines().count(), 1 + 8);
    let latex = ok(&["table", "--pmn", "5,2,3", "--format", "latex-table"]);
    assert_eq!(latex.matches("\\\\\n").count(), 2);
    assert!(latex.contains("15625^{1}"));
    let v = json(&["table", "--rs-grid", "r=0..2,s=1..2", "--format", "json"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn csv_and_json_round_trip() {
    let csv_text = ok(&[
        "table",
        "--pmn-grid",
        "p=2..5,m=1..3,n=1..3",
        "--rs-grid",
        "r=0..3,s=1..3",
        "--format",
        "csv",
    ]);
    let v = json(&[
        "table",
        "--pmn-grid",
        "p=2..5,m=1..3,n=1..3",
        "--rs-grid",
        "r=0..3,s=1..3",
    ]);
    let rows = v["rows"].as_array().unwrap();
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    assert_eq!(rows.len(), 27 + 12);
    for (record, row) in records.iter().zip(rows) {
        let expected = match row["route"].as_str().unwrap() {
            "closed_form_pmn" => {
                let params = row["params"].as_str().unwrap();
                let nums: Vec<u64> = params
                    .split(',')
                    .map(|kv| kv.split_once('=').unwrap().1.parse().unwrap())
                    .collect();
                laplacian_spectrum_zpmn(&ZpmnParams::new(nums[0], nums[1] as u32, nums[2] as u32).unwrap())
            }
            _ => {
                let params = row["params"].as_str().unwrap();
                let nums: Vec<u32> = params
                    .split(',')
                    .map(|kv| kv.split_once('=').unwrap().1.parse().unwrap())
                    .collect();
                laplacian_spectrum_z2r4s(nums[0], nums[1]).unwrap()
            }
        };
        let from_csv: Spectrum = record[4].parse().unwrap();
        assert_eq!(from_csv, expected);
        assert_eq!(json_spectrum(row), expected);
        assert_eq!(&record[0], row["group"].as_str().unwrap());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--pmn-grid", "p=2..7,m=1..3,n=1..3"][..],
        &["verify", "--all-pmn", "p<=3,m<=2,n<=2"],
        &["spectrum", "--group", "Z2 x Z3", "--format", "plain"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn large_parameters_stay_symbolic() {
    let v = json(&["spectrum", "--pmn", "7,6,5"]);
    let s = json_spectrum(&v);
    assert_eq!(s.total_multiplicity(), powerlap::arith::big_pow(7, 30));
    // Multiplicities beyond 64 bits are emitted as strings.
    assert!(v["spectrum"].as_object().unwrap().values().any(Value::is_string));
}
