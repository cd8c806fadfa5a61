//! End-to-end tests of the `hkq` binary: golden help texts, output formats,
//! exit codes, and reproducibility.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hkq"))
        .args(args)
        .env_remove("HKQ_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

const SUBCOMMANDS: [&str; 13] = [
    "series",
    "localize",
    "decompose",
    "substitute",
    "ledger",
    "cohomology",
    "tn-l2",
    "tn-series",
    "ah-params",
    "ah-integrate",
    "ah-wbound",
    "adhm-check",
    "elliptic",
];

#[test]
fn help_matches_golden_files() {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let root = run(&["--help"]);
    assert_eq!(root.status.code(), Some(0));
    assert_eq!(
        stdout(&root),
        std::fs::read_to_string(golden_dir.join("help_root.txt")).unwrap()
    );
    for sub in SUBCOMMANDS {
        let out = run(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub} --help exits 0");
        let golden = std::fs::read_to_string(golden_dir.join(format!("help_{sub}.txt")))
            .unwrap_or_else(|_| panic!("golden file for {sub}"));
        assert_eq!(stdout(&out), golden, "help text drifted for {sub}");
    }
}

#[test]
fn elliptic_at_zero_is_pi_over_two() {
    let out = run(&["elliptic", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"K\":1.5707963267948966,\"E\":1.5707963267948966}\n"
    );
}

#[test]
fn series_csv_counts_flat_monomials() {
    let out = run(&[
        "series", "--model", "flat", "--n", "2", "--order", "8", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "d,rank\n0,1\n1,4\n2,10\n3,20\n4,35\n5,56\n6,84\n7,120\n8,165\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn decompose_clebsch_gordan_square() {
    // (t̃ + t̃⁻¹)² = t̃² + 2 + t̃⁻² decomposes as χ₂ + χ₀.
    let out = run(&[
        "decompose",
        "--group",
        "sp1",
        "--char",
        "{\"terms\":[{\"w\":[2],\"m\":1},{\"w\":[0],\"m\":2},{\"w\":[-2],\"m\":1}]}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"terms\":[{\"w\":[2],\"m\":1},{\"w\":[0],\"m\":1}]}\n"
    );
}

#[test]
fn substitute_round_trips_symbols() {
    let out = run(&[
        "substitute",
        "--group",
        "sp1",
        "--series",
        "{\"order\":1,\"coeffs\":[{\"d\":1,\"char\":{\"terms\":[{\"w\":[1],\"m\":1}]}}]}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"order\":1,\"coeffs\":[{\"d\":1,\"char\":{\"terms\":[{\"w\":[1],\"m\":1},{\"w\":[-1],\"m\":1}]}}]}\n"
    );
}

#[test]
fn localize_reads_file_input() {
    let dir = std::env::temp_dir().join("hkq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("points.json");
    std::fs::write(
        &path,
        "{\"points\":[{\"bundle\":{\"t\":0,\"w\":[]},\"cotangent\":[{\"t\":1,\"w\":[]}]}]}",
    )
    .unwrap();
    let out = run(&["localize", "--file", path.to_str().unwrap(), "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"order\":3,\"coeffs\":[{\"d\":0,\"char\":{\"terms\":[{\"w\":[],\"m\":1}]}},{\"d\":1,\"char\":{\"terms\":[{\"w\":[],\"m\":1}]}},{\"d\":2,\"char\":{\"terms\":[{\"w\":[],\"m\":1}]}},{\"d\":3,\"char\":{\"terms\":[{\"w\":[],\"m\":1}]}}]}\n"
    );
}

#[test]
fn adhm_check_runs_on_file() {
    let dir = std::env::temp_dir().join("hkq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("adhm.json");
    std::fs::write(
        &path,
        "{\"k\":1,\"r\":2,\"alpha0\":[[0.0,0.0]],\"alpha1\":[[0.0,0.0]],\"a\":[[1.0,0.0],[0.0,0.0]],\"b\":[[0.0,0.0],[1.0,0.0]]}",
    )
    .unwrap();
    let out = run(&["adhm-check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"complex_residual\":0.0,\"real_residual\":0.0,\"stable\":true,\"norm\":2.0}\n"
    );
}

#[test]
fn domain_error_exits_one_with_error_object() {
    let out = run(&["elliptic", "--k", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(text.trim()).expect("machine-readable");
    assert_eq!(v["error"]["kind"], "domain");
    let out2 = run(&[
        "decompose",
        "--group",
        "sp1",
        "--char",
        "{\"terms\":[{\"w\":[1],\"m\":1}]}",
    ]);
    assert_eq!(out2.status.code(), Some(1));
    let v2: serde_json::Value = serde_json::from_str(stdout(&out2).trim()).unwrap();
    assert_eq!(v2["error"]["kind"], "not_a_character");
}

#[test]
fn mixed_rank_points_are_a_domain_error() {
    let out = run(&[
        "localize",
        "--points",
        "{\"points\":[{\"bundle\":{\"t\":0,\"w\":[0]},\"cotangent\":[{\"t\":1,\"w\":[1]}]},{\"bundle\":{\"t\":0,\"w\":[0,0]},\"cotangent\":[{\"t\":1,\"w\":[1,0]}]}]}",
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["error"]["kind"], "dimension");
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["series", "--model", "flat", "--order", "4", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["series", "--model", "flat"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["ah-integrate", "--alpha", "1.0", "--tol", "1e-4"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);

    let sampled = ["ah-wbound", "--k", "0.3", "--samples", "2000"];
    let s1 = run(&sampled);
    let s2 = run(&sampled);
    assert_eq!(s1.stdout, s2.stdout);
}

#[test]
fn seed_env_changes_sampling_stream() {
    let base = run(&["ah-wbound", "--k", "0.3", "--samples", "500"]);
    let seeded = Command::new(env!("CARGO_BIN_EXE_hkq"))
        .args(["ah-wbound", "--k", "0.3", "--samples", "500"])
        .env("HKQ_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(seeded.status.code(), Some(0));
    assert_ne!(base.stdout, seeded.stdout);
    let v: serde_json::Value = serde_json::from_str(stdout(&base).trim()).unwrap();
    assert_eq!(v["violations"], 0);
}

#[test]
fn tn_series_matches_flat_series() {
    let tn = run(&["tn-series", "--order", "6", "--format", "csv"]);
    let flat = run(&[
        "series", "--model", "flat", "--n", "1", "--order", "6", "--format", "csv",
    ]);
    assert_eq!(tn.stdout, flat.stdout);
}

#[test]
fn ledger_accepts_external_ledger_files() {
    let dir = std::env::temp_dir().join("hkq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ledger.json");
    std::fs::write(
        &path,
        "{\"entries\":[{\"d\":2,\"lambda\":[2],\"m\":1},{\"d\":2,\"lambda\":[0],\"m\":3}]}",
    )
    .unwrap();
    let out = run(&["ledger", "--file", path.to_str().unwrap(), "--group", "sp1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[{\"d\":2,\"even\":18,\"odd\":0}]\n");
    let twist = run(&[
        "ledger",
        "--file",
        path.to_str().unwrap(),
        "--group",
        "sp1",
        "--twist",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&twist),
        "d,lambda,j,dim\n2,\"(2)\",1,3\n2,\"(0)\",1,1\n2,\"(0)\",2,1\n2,\"(0)\",3,1\n"
    );
}

#[test]
fn ledger_prints_both_dimension_columns() {
    let out = run(&[
        "ledger", "--model", "flat", "--n", "1", "--dmax", "2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "d,lambda,m,even,odd,stated_even\n\
                    0,\"(0)\",1,1,0,1\n\
                    1,\"(1)\",1,4,0,6\n\
                    2,\"(2)\",1,9,0,18\n";
    assert_eq!(stdout(&out), expected);
}
