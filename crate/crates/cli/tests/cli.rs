use std::process::Command;

use riordan_cli::{run, EXIT_MATH, EXIT_USAGE};
use riordan_core::catalog::{binomial, named_riordan};
use riordan_core::matrix::Triangle;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("riordan").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn pascal_csv() {
    let (code, out, _) = call(&[
        "triangle", "--name", "pascal", "--order", "5", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4], "1,4,6,4,1");
    let t = Triangle::from_csv(&out).unwrap();
    for n in 0..5 {
        for k in 0..=n {
            assert_eq!(t.entry(n, k), binomial(n as i64, k as i64));
        }
    }
}

#[test]
fn positional_name_and_literal_pair() {
    let (_, by_name, _) = call(&["triangle", "pascal", "--order", "6"]);
    let (_, by_flag, _) = call(&["triangle", "--name", "pascal", "--order", "6"]);
    assert_eq!(by_name, by_flag);

    // (1/(1-t), t) has every entry on and below the diagonal equal to 1
    let (code, appell, _) = call(&["triangle", "g=geometric;f=0,1", "--order", "6"]);
    assert_eq!(code, 0);
    let t = Triangle::from_csv(&appell).unwrap();
    assert!(t.rows().iter().flatten().all(|x| *x == binomial(1, 0)));

    let (_, by_flags, _) = call(&["triangle", "--g", "1,0", "--f", "0,1", "--order", "6"]);
    assert_eq!(
        Triangle::from_csv(&by_flags).unwrap(),
        Triangle::identity(6)
    );
}

#[test]
fn json_round_trip_and_csv_agree() {
    let (code, json, _) = call(&[
        "triangle",
        "catalan_bell",
        "--order",
        "9",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let (_, csv, _) = call(&[
        "triangle",
        "catalan_bell",
        "--order",
        "9",
        "--format",
        "csv",
    ]);
    let from_json = Triangle::from_json(&json).unwrap();
    assert_eq!(from_json, Triangle::from_csv(&csv).unwrap());
    assert_eq!(
        from_json,
        named_riordan("catalan_bell", 64)
            .unwrap()
            .triangle(9)
            .unwrap()
    );
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pascal.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&[
        "triangle", "pascal", "--order", "7", "--format", "json", "--out", p,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let t = Triangle::from_json(&body).unwrap();
    assert_eq!(t, named_riordan("pascal", 10).unwrap().triangle(7).unwrap());
}

#[test]
fn az_output() {
    let (code, out, _) = call(&["az", "--name", "pascal"]);
    assert_eq!(code, 0);
    assert_eq!(out, "A: 1, 1\nZ: 1\n");
    let (_, out, _) = call(&["az", "identity"]);
    assert_eq!(out, "A: 1\nZ: 0\n");
    let (_, out, _) = call(&["az", "pascal", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["A"], serde_json::json!(["1", "1"]));
}

#[test]
fn mul_and_inv() {
    let (_, sq, _) = call(&["mul", "pascal", "pascal", "--order", "5"]);
    assert_eq!(sq.lines().nth(2).unwrap(), "4,4,1,0,0");
    let (_, inv, _) = call(&["inv", "pascal", "--order", "4"]);
    assert_eq!(inv.lines().nth(3).unwrap(), "-1,3,-3,1");
}

#[test]
fn quasi_matrix() {
    let (code, out, _) = call(&["quasi", "pascal", "--order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1,0,0,0\n1,1,0,0\n1,1,1,0\n1,1,1,1\n");
}

#[test]
fn ctransform_weights() {
    let (_, rook, _) = call(&[
        "ctransform",
        "pascal",
        "--weight",
        "factorial",
        "--order",
        "6",
    ]);
    assert_eq!(rook.lines().nth(5).unwrap(), "120,600,600,200,25,1");
    let (_, lag, _) = call(&[
        "ctransform",
        "pascal",
        "--weight",
        "laguerre",
        "--order",
        "4",
    ]);
    assert_eq!(lag.lines().nth(3).unwrap(), "-1/6,3/2,-3,1");
    let (_, pow, _) = call(&[
        "ctransform",
        "pascal",
        "--weight",
        "power:2",
        "--order",
        "3",
    ]);
    assert_eq!(pow.lines().nth(2).unwrap(), "4,4,1");
    let (_, list, _) = call(&[
        "ctransform",
        "pascal",
        "--weight",
        "1, 1, 2",
        "--order",
        "3",
    ]);
    assert_eq!(list.lines().nth(2).unwrap(), "2,4,1");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.csv");
    std::fs::write(&path, "1,0,0\n1,1,0\n1,1,2\n").unwrap();
    let (code, tri, _) = call(&[
        "ctransform",
        "pascal",
        "--weight",
        path.to_str().unwrap(),
        "--order",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(tri.lines().nth(2).unwrap(), "2,4,1");
}

#[test]
fn catalog_list_is_sorted() {
    let (code, out, _) = call(&["catalog", "list"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert!(lines.contains(&"array pascal"));
    assert!(lines.contains(&"series fuss:<m>"));
}

#[test]
fn verify_small_limit() {
    let (code, out, _) = call(&["verify", "--suite", "builtin", "--limit", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "verified"));
    let (code, _, _) = call(&["verify", "--suite", "nope"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["triangle", "--g", "1,x", "--f", "0,1"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["triangle", "no_such_array"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["triangle", "pascal", "--order", "abc"]).0,
        EXIT_USAGE
    );
    let (code, _, err) = call(&["triangle", "--g", "0,1", "--f", "0,1"]);
    assert_eq!(code, EXIT_MATH);
    assert!(err.contains("g(0) must be 1"));
    let (code, _, err) = call(&["triangle", "--g", "1", "--f", "0,0,1"]);
    assert_eq!(code, EXIT_MATH);
    assert!(err.contains("order"));
    assert_eq!(call(&["triangle", "pascal", "--order", "0"]).0, EXIT_MATH);
    assert_eq!(
        call(&["triangle", "pascal", "--prec", "3", "--order", "6"]).0,
        EXIT_MATH
    );
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn precision_env_var_and_flag() {
    let bin = env!("CARGO_BIN_EXE_riordan");
    let short = Command::new(bin)
        .args(["triangle", "pascal", "--order", "6"])
        .env("RIORDAN_PREC", "3")
        .output()
        .unwrap();
    assert_eq!(short.status.code(), Some(EXIT_MATH));
    let overridden = Command::new(bin)
        .args(["triangle", "pascal", "--order", "6", "--prec", "10"])
        .env("RIORDAN_PREC", "3")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
    assert!(String::from_utf8(overridden.stdout)
        .unwrap()
        .ends_with("1,5,10,10,5,1\n"));
}
