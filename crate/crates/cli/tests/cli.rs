use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qszego"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let json = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), json)
}

/// Compares stdout with `tests/golden/<name>`; set `QSZEGO_BLESS=1` to rewrite.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("QSZEGO_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(want == out.stdout, "{name} differs from the golden file");
}

fn rows(v: &Value) -> &Vec<Value> {
    v["rows"].as_array().unwrap()
}

#[test]
fn golden_reports() {
    golden(
        "hankel_rs_3.json",
        &["hankel", "--family", "rs", "--n", "3"],
    );
    golden("hankel_F_0.json", &["hankel", "--family", "F", "--n", "0"]);
    golden(
        "scan_odd_prime_product.json",
        &[
            "scan",
            "--conjecture",
            "odd-prime-product",
            "--p",
            "3",
            "--m",
            "2",
            "--n",
            "0..9",
        ],
    );
    golden(
        "limits_alt_even.csv",
        &[
            "limits",
            "--id",
            "alt-even",
            "--grid",
            "n=0..1,m=1..2,k=1..2",
            "--format",
            "csv",
        ],
    );
}

#[test]
fn hankel_three_way() {
    let (code, v) = report(&["hankel", "--family", "rs", "--n", "3"]);
    assert_eq!(code, 0);
    let row = &rows(&v)[0];
    assert_eq!(row["pass"], true);
    assert_eq!(row["computed"], row["expected"]);
    assert_eq!(row["computed"], row["product"]);

    let (_, v) = report(&["hankel", "--family", "F", "--n", "0", "--pretty"]);
    assert_eq!(rows(&v)[0]["computed"], "(1)");

    // d(2, q^3, q) vanishes
    let (code, v) = report(&[
        "hankel", "--family", "f", "--n", "2", "--s-val", "q^3", "--pretty",
    ]);
    assert_eq!(code, 0);
    assert_eq!(rows(&v)[0]["computed"], "0");

    let (code, v) = report(&["hankel", "--family", "h", "--n", "0..2", "--t-val", "q^2"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&v).len(), 3);
}

#[test]
fn odd_prime_product_values() {
    let (code, v) = report(&[
        "scan",
        "--conjecture",
        "odd-prime-product",
        "--p",
        "3",
        "--m",
        "2",
        "--n",
        "0..9",
    ]);
    assert_eq!(code, 0);
    let got: Vec<&str> = rows(&v)
        .iter()
        .map(|r| r["expected"].as_str().unwrap())
        .collect();
    assert_eq!(
        got,
        ["1", "5", "3", "45", "27", "135", "81", "405", "243", "10935"]
    );
    assert!(rows(&v).iter().all(|r| r["holds"] == true));
}

#[test]
fn suites_pass() {
    for args in [
        &["verify", "rs", "--id", "gauss-even", "--n", "0..10"][..],
        &[
            "verify",
            "gf",
            "--id",
            "q-binomial-theorem",
            "--order",
            "12",
        ],
        &["verify", "norm", "--id", "f-expansion", "--n", "0..6"],
        &["verify", "closed", "--n", "0..3", "--m", "0..3"],
        &[
            "verify",
            "cheb",
            "--id",
            "even-T",
            "--id",
            "T-boundary",
            "--n",
            "0..4",
            "--m",
            "0..4",
        ],
        &[
            "limits",
            "--id",
            "alt-even",
            "--grid",
            "n=0..3,m=1..4,k=1..4",
        ],
        &[
            "verify",
            "limits",
            "--id",
            "quad-even",
            "--id",
            "quad-even-sign-flip",
            "--grid",
            "n=0..2,m=0..2,k=1..6,r=0..2",
        ],
        &[
            "scan",
            "--conjecture",
            "power-of-two-base",
            "--grid",
            "n=0..6,m=0..3,k=0..2",
        ],
    ] {
        let (code, v) = report(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(!rows(&v).is_empty(), "{args:?}");
        assert!(rows(&v).iter().all(|r| r["pass"] == true), "{args:?}");
        assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["verify", "gf", "--id", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "rs", "--n", "0..x"]).status.code(), Some(2));
    assert_eq!(run(&["limits", "--grid", "z=1..2"]).status.code(), Some(2));
    assert_eq!(
        run(&["scan", "--conjecture", "prime-base", "--p", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["scan", "--conjecture", "prime-base", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["hankel", "--family", "G", "--n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["hankel", "--family", "rs", "--n", "1", "--s-val", "q^(1/3)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    // a control that never fails is a failed run
    let (code, v) = report(&["verify", "rs", "--id", "neg-q-floor", "--n", "0..0"]);
    assert_eq!(code, 1);
    assert_eq!(rows(&v)[0]["pass"], false);
    let (code, _) = report(&["verify", "rs", "--id", "neg-q-floor", "--n", "0..6"]);
    assert_eq!(code, 0);
    let (code, _) = report(&["hankel", "--family", "rs-shifted", "--n", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn empty_grid() {
    let (code, v) = report(&[
        "scan",
        "--conjecture",
        "power-of-two-base",
        "--grid",
        "n=0..-1",
    ]);
    assert_eq!(code, 0);
    assert!(rows(&v).is_empty());
}

#[test]
fn deterministic_across_workers() {
    let args = ["verify", "props", "--seed", "7", "--cases", "24"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let other = run(&["verify", "props", "--seed", "8", "--cases", "24"]);
    assert_ne!(one.stdout, other.stdout);
}

#[test]
fn out_file_and_csv() {
    let dir = std::env::temp_dir().join(format!("qszego-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = run(&[
        "verify",
        "rs",
        "--id",
        "gauss-odd",
        "--n",
        "0..3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,params,pass,holds,control,expected,computed,witness")
    );
    assert_eq!(lines.count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn canonical_terms() {
    let (_, v) = report(&["hankel", "--family", "rs", "--n", "1"]);
    // d(1, s, q) = -s(1 - q) = -s + q s
    let row = &rows(&v)[0];
    assert_eq!(
        row["computed"]["num"],
        serde_json::json!([[0, 1, 0, 0, "-1"], [2, 1, 0, 0, "1"]])
    );
    assert_eq!(
        row["computed"]["den"],
        serde_json::json!([[0, 0, 0, 0, "1"]])
    );
}

#[test]
fn list_ids() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("scan: ") && l.contains("odd-prime-product")));
}
