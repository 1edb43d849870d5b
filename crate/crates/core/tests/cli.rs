use std::process::{Command, Output};

use serde_json::Value;

fn coinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coinv")).args(args).output().expect("run coinv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = coinv(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn hilbert_of_coinvariants() {
    let o = coinv(&["hilbert", "-n", "3", "-k", "3", "-r", "1", "--variant", "S"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1,2,2,1");
    let o = coinv(&["hilbert", "-n", "3", "-k", "3", "--setting", "y"]);
    assert_eq!(stdout(&o).trim(), "1,2,2,1");
    let o = coinv(&["hilbert", "-n", "3", "-k", "2", "-r", "2", "--method", "combinatorial"]);
    let v = json(&["hilbert", "-n", "3", "-k", "2", "-r", "2"]);
    let oracle: Vec<String> = v["hilbert"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    assert_eq!(stdout(&o).trim(), oracle.join(","));
}

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate", "--osp", "-n", "3", "-k", "2", "-r", "1"])["count"], 6);
    assert_eq!(json(&["enumerate", "--words", "-n", "2", "-r", "2"])["count"], 8);
    let faces = json(&["enumerate", "--faces", "-n", "2", "-k", "2", "-r", "1"]);
    assert_eq!(faces["count"], 2);
    let text = stdout(&coinv(&["enumerate", "--osp", "-n", "3", "-k", "2"]));
    assert!(text.starts_with("osp\tblocks\tdes\tmaj\tcomaj\n"));
    assert!(text.trim_end().ends_with("count: 6"));
    let csv = stdout(&coinv(&["enumerate", "--words", "-n", "2", "-r", "2", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn rewrite_trace_matches_worked_example() {
    let o = coinv(&["rewrite", "-n", "5", "-k", "4", "-r", "2", "--variant", "S", "--monomial", "y{5}^3*y{2,5}^2*y{1,2,3,5}^2"]);
    assert!(o.status.success());
    let expected = "\
y = y{1,2,3,5}^2*y{2,5}^2*y{5}^3
(1) move on y{1,2,3,5}^r in y{1,2,3,5}^2*y{2,5}^2*y{5}^3
    y ≡ -y{1,2,4,5}^2*y{2,5}^2*y{5}^3 - y{2,3,4,5}^2*y{2,5}^2*y{5}^3
(2) move on y{2,5}^r in y{2,3,4,5}^2*y{2,5}^2*y{5}^3
    y ≡ -y{1,2,4,5}^2*y{2,5}^2*y{5}^3 + y{2,3,4,5}^2*y{3,5}^2*y{5}^3 + y{2,3,4,5}^2*y{4,5}^2*y{5}^3
result: -y{1,2,4,5}^2*y{2,5}^2*y{5}^3 + y{2,3,4,5}^2*y{3,5}^2*y{5}^3 + y{2,3,4,5}^2*y{4,5}^2*y{5}^3
";
    assert_eq!(stdout(&o), expected);
    // whitespace-insensitive input
    let spaced = coinv(&["rewrite", "-n", "5", "-k", "4", "-r", "2", "--monomial", "y{5}^3 * y{2, 5}^2 * y{1,2,3,5}^2"]);
    assert_eq!(stdout(&spaced), expected);

    let x = json(&["rewrite", "-n", "5", "-k", "4", "-r", "2", "--monomial", "x5^7*x2^4*x1^2*x3^2"]);
    assert_eq!(x["mu"], "(4,4,2,2,1,1,1)");
    assert_eq!(x["same_mu"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_passes_and_reports_names() {
    let o = coinv(&["verify", "-n", "4", "-k", "2", "-r", "1", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS certification: triple agreement"));
    assert!(text.contains("PASS stratum characters"));
    assert!(text.trim_end().ends_with("all checks passed"));
    let v = json(&["verify", "-n", "3", "-k", "2", "-r", "2", "--all", "--seed", "9"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn frobenius_json() {
    let v = json(&["frobenius", "-n", "3", "-k", "3"]);
    assert_eq!(v["basis"], "schur");
    let terms = v["terms"].as_array().unwrap();
    let find = |p: &[u64]| terms.iter().find(|t| t["partition"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).eq(p.iter().copied())).unwrap()["poly"].clone();
    assert_eq!(find(&[3]), "1");
    assert_eq!(find(&[2, 1]), "q + q^2");
    assert_eq!(find(&[1, 1, 1]), "q^3");
    let oracle = json(&["frobenius", "-n", "3", "-k", "3", "--source", "oracle"]);
    assert_eq!(oracle, v);
    let multi = json(&["frobenius", "-n", "3", "-k", "2", "--multigraded"]);
    let multi_oracle = json(&["frobenius", "-n", "3", "-k", "2", "--multigraded", "--source", "oracle"]);
    assert_eq!(multi, multi_oracle);
}

#[test]
fn stats_of_worked_examples() {
    let v = json(&["stats", "-n", "5", "-r", "4", "--word", "3^3 1^1 5^2 2^2 4^0"]);
    assert_eq!(v["maj"], "28");
    assert_eq!(v["des_set"], "{2,3}");
    let v = json(&["stats", "-n", "6", "-r", "3", "--monomial", "y{4}^5*y{1,3,4}^7*y{1,2,3,4,6}*y{1,2,3,4,5,6}^4"]);
    assert_eq!(v["gd"], "(4^2 1^0 3^0 2^2 6^2 5^1; 1,0,2,0,0,1)");
}

#[test]
fn output_is_deterministic() {
    let args = ["basis", "-n", "3", "-k", "2", "-r", "2", "--format", "json"];
    assert_eq!(coinv(&args).stdout, coinv(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(coinv(&["hilbert", "-n", "3", "-k", "5"]).status.code(), Some(1));
    assert_eq!(coinv(&["nonsense"]).status.code(), Some(1));
    assert_eq!(coinv(&["hilbert", "--variant", "Q"]).status.code(), Some(1));
    assert_eq!(coinv(&["rewrite", "-n", "3", "-k", "1", "--monomial", "y{1}*y{2}"]).status.code(), Some(1));
    let limited = coinv(&["hilbert", "-n", "4", "-k", "4", "-r", "2", "--cap-slice", "5"]);
    assert_eq!(limited.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&limited.stderr).contains("resource limit"));
    assert_eq!(coinv(&["frobenius", "-n", "9", "-k", "2"]).status.code(), Some(2));
    assert_eq!(coinv(&["--help"]).status.code(), Some(0));
}
