//! End-to-end tests of the `pedpod` binary: subcommand output and the exit
//! code contract (0 pass, 1 usage/parse, 2 verification failure, 3 bound).

use std::process::{Command, Output};

fn pedpod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pedpod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_single_n() {
    let out = pedpod(&["count", "--family", "PD[0,3]", "--n", "9"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "27");

    let out = pedpod(&["count", "--family", "PD[0,3]", "--n", "0"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn count_table_and_methods() {
    let out = pedpod(&["count", "--family", "PDpm[1,6]", "--nmax", "10", "--method", "both"]);
    assert!(out.status.success(), "dual-method agreement expected");
    let text = stdout(&out);
    assert!(text.starts_with("n,count\n0,1\n1,1\n"));

    // series route works beyond the enumeration bound
    let out = pedpod(&["count", "--family", "B[4]", "--n", "200", "--method", "series"]);
    assert!(out.status.success());

    // enumeration route refuses past the bound with exit code 3
    let out = pedpod(&["count", "--family", "B[4]", "--n", "200", "--method", "enum"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn count_persists_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("counts.json");
    let csv_path = dir.path().join("counts.csv");
    let out = pedpod(&[
        "count", "--family", "B[4]", "--nmax", "4", "--method", "both",
        "--json", json_path.to_str().unwrap(),
        "--csv", csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = std::fs::read_to_string(&json_path).unwrap();
    assert!(json.contains("\"family\":\"B[4]\""));
    assert!(json.contains("[\"1\",\"1\",\"2\",\"3\",\"4\"]"));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv, "n,count\n0,1\n1,1\n2,2\n3,3\n4,4\n");
}

#[test]
fn enumerate_lists_members() {
    let out = pedpod(&["enumerate", "--family", "PD[0,2]", "--n", "4"]);
    assert_eq!(stdout(&out), "4\n3,1\n2,1^2\n1^4\n");
}

#[test]
fn verify_exit_codes_and_json() {
    let out = pedpod(&["verify", "--id", "pent", "--r", "2", "--nmax", "60"]);
    assert!(out.status.success());
    let json = stdout(&out);
    assert!(json.contains("\"identity\":\"pent\""));
    assert!(json.trim_end().ends_with("\"verdict\":true}"));

    // parameter guard: ped0r_sum needs even r -> usage error
    let out = pedpod(&["verify", "--id", "ped0r_sum", "--r", "3", "--nmax", "10"]);
    assert_eq!(out.status.code(), Some(1));

    let out = pedpod(&["verify", "--id", "beck_B1", "--r", "2", "--nmax", "25"]);
    assert!(out.status.success());

    let out = pedpod(&["verify", "--id", "no_such_identity", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let csv_path = dir.path().join("report.csv");
    let out = pedpod(&[
        "verify",
        "--id",
        "prd",
        "--r",
        "2",
        "--nmax",
        "3",
        "--method",
        "both",
        "--json",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = std::fs::read_to_string(&json_path).unwrap();
    assert_eq!(json, stdout(&out).trim_end());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv, "n,lhs,rhs,pass\n0,1,1,true\n1,1,1,true\n2,2,2,true\n3,3,3,true\n");
}

#[test]
fn bijection_traces() {
    let out = pedpod(&["bijection", "--name", "pdbar2pe", "--r", "3", "--p", "12^3,9^4,7,3^5,2,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("output: 24,18^2,7,6^2,3^5,1^3"));

    let out = pedpod(&["bijection", "--name", "pnd2pem", "--r", "3", "--p", "21^2,20,18^5,11^2,9^4,7,6^3,3^6"]);
    assert!(stdout(&out).contains("output: 54,21^2,20,18^3,11^2,9^4,7,3^6"));

    // inverse direction restores the worked example
    let out = pedpod(&["bijection", "--name", "pnd2pem", "--r", "3", "--inverse", "--p", "54,21^2,20,18^3,11^2,9^4,7,3^6"]);
    assert!(stdout(&out).contains("output: 21^2,20,18^5,11^2,9^4,7,6^3,3^6"));

    // membership guard: (3,3) is not 3-regular
    let out = pedpod(&["bijection", "--name", "glaisher", "--r", "3", "--p", "3,3"]);
    assert_eq!(out.status.code(), Some(1));

    // involutions
    let out = pedpod(&["bijection", "--name", "psi", "--t", "0", "--r", "2", "--p", "2,1,1"]);
    assert!(stdout(&out).contains("-> 1^4"));
    let out = pedpod(&["bijection", "--name", "psi", "--t", "0", "--r", "2", "--p", "3,1"]);
    assert!(stdout(&out).contains("fixed point"));
    let out = pedpod(&["bijection", "--name", "ped0r-inv", "--r", "2", "--p", "4|"]);
    assert!(stdout(&out).contains("-> ( | 4)"));
}

#[test]
fn beck_and_rank_and_parity() {
    let out = pedpod(&["beck", "--id", "beck_B1", "--r", "2", "--nmax", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"n\":4,\"lhs\":\"1\",\"rhs\":\"1\",\"pass\":true"));

    let out = pedpod(&["beck", "--id", "pent", "--r", "2", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(1), "beck accepts only beck ids");

    let out = pedpod(&["rank", "--r", "2", "--n", "6"]);
    let text = stdout(&out);
    assert!(text.starts_with("rank,count\n"));
    assert!(text.contains("total,9"));

    let out = pedpod(&["parity", "--nmax", "60"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("parity_ped_triangular"));
}

#[test]
fn oeis_check_command() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# ped(n)\n0 1\n1 1\n2 2\n3 3\n4 4\n5 6\n6 9\n").unwrap();
    let out = pedpod(&["oeis-check", "--family", "PD[0,2]", "--bfile", good.to_str().unwrap(), "--nmax", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("agreement"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 1\n2 7\n").unwrap();
    let out = pedpod(&["oeis-check", "--family", "PD[0,2]", "--bfile", bad.to_str().unwrap(), "--nmax", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("mismatch at n = 2"));

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let out = pedpod(&["oeis-check", "--family", "PD[0,2]", "--bfile", empty.to_str().unwrap(), "--nmax", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_command() {
    let out = pedpod(&["table", "--family", "PD[0,2]", "--family", "B[4]", "--nmax", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,PD[0,2],B[4]\n0,1,1\n"));
    // ped(n) = b_4(n) row-wise
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[1], cols[2], "{line}");
    }
}

#[test]
fn determinism_byte_identical_output() {
    let run = || stdout(&pedpod(&["verify", "--id", "dsd", "--r", "3", "--nmax", "20", "--method", "both"]));
    assert_eq!(run(), run());
}
