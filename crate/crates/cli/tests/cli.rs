use std::process::{Command, Output};

use serde_json::Value;

fn kqh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kqh")).args(args).output().expect("kqh runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn gw_query_by_label() {
    let o = kqh(&["gw", "--a", "c1", "--b", "c2^2", "--c", "c2^2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "24\n");
}

#[test]
fn gw_query_by_coordinates() {
    let c1 = "[0,1,0,0,0,0,0,0,0,0,0,0,0]";
    let pt = "[0,0,0,0,0,0,0,0,0,0,0,0,1]";
    let o = kqh(&["gw", "--a", c1, "--b", "c1^2", "--c", pt, "--n", "1"]);
    assert_eq!(stdout(&o), "3\n");
    let o = kqh(&["gw", "--a", "c1", "--b", "line", "--c", "pt", "--n", "2"]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn gw_rational_output() {
    let o = kqh(&["gw", "--a", "1/2 c1", "--b", "c2^2", "--c", "P2", "--n", "1"]);
    assert_eq!(stdout(&o), "2\n");
    let o = kqh(&["gw", "--a", "1/3 c1", "--b", "c2^2", "--c", "P2", "--n", "1"]);
    assert_eq!(stdout(&o), "4/3\n");
}

#[test]
fn input_errors_exit_two() {
    let cases: [&[&str]; 6] = [
        &["gw", "--a", "c7", "--b", "c1", "--c", "c1", "--n", "1"],
        &["gw", "--a", "[0,1,0]", "--b", "c1", "--c", "c1", "--n", "1"],
        &["gw", "--a", "c1 + q", "--b", "c1", "--c", "c1", "--n", "1"],
        &["eigen", "--q", "one"],
        &["eigen", "--tol", "-1"],
        &["table", "--format", "svg"],
    ];
    for args in cases {
        let o = kqh(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error"), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    assert!(stderr(&kqh(cases[0])).contains("unknown class label `c7`"));
    assert!(stderr(&kqh(cases[1])).contains("malformed coordinates"));
    assert!(stderr(&kqh(cases[3])).contains("bad q"));
    assert_eq!(kqh(&["gw", "--a", "c1"]).status.code(), Some(2));
}

#[test]
fn eigen_json_report() {
    let o = kqh(&["eigen", "--q", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], "1");
    assert_eq!(v["semisimple"], true);
    let roots = v["roots"].as_array().unwrap();
    let mults: Vec<u64> = roots.iter().map(|r| r["mult"].as_u64().unwrap()).collect();
    assert_eq!(mults.iter().sum::<u64>(), 13);
    assert_eq!(mults.iter().filter(|&&m| m == 1).count(), 7);
    assert_eq!(mults.iter().filter(|&&m| m == 2).count(), 3);
    let char_poly: Vec<&str> = v["char_poly"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(char_poly, ["0", "-243", "0", "0", "-521", "0", "0", "-312", "0", "0", "-33", "0", "0", "1"]);
}

#[test]
fn eigen_is_byte_stable() {
    let args = ["eigen", "--q", "5/3", "--format", "json"];
    assert_eq!(kqh(&args).stdout, kqh(&args).stdout);
    let o = kqh(&["eigen", "--q", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trace_det"], "0");
    assert_eq!(v["semisimple"], false);
}

#[test]
fn eigen_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roots.svg");
    let o = kqh(&["eigen", "--svg", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("zero eigenvalue length = 1"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 7);
    assert_eq!(svg.matches(r#"fill="red""#).count(), 3);
    assert!(svg.contains(">Real<") && svg.contains(">Imaginary<"));
    assert_eq!(stdout(&kqh(&["eigen", "--format", "svg"])), svg);
}

#[test]
fn verify_passes_on_bundled_data() {
    let o = kqh(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 14);
    assert!(!text.contains("FAIL"));
    assert!(text.ends_with("14/14 checks passed\n"));
}

#[test]
fn verify_json_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.json");
    let o = kqh(&["verify", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 14);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_names_the_failed_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.json");
    let text = kronecker_qh_cli::golden::GOLDEN_JSON.replacen("[[24, 18, 13, 4]", "[[24, 18, 13, 5]", 1);
    std::fs::write(&path, text).unwrap();
    let o = kqh(&["verify", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  gw-table"));
    assert!(stdout(&o).contains("I_1(c1, c2^2, P2) = 4, expected 5"));
    assert_eq!(stderr(&o), "verification failed: gw-table\n");
}

#[test]
fn damaged_data_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    std::fs::write(&golden, "{ \"degree\": 57 }").unwrap();
    let o = kqh(&["verify", "--golden", golden.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed golden file"));

    let cells = dir.path().join("cells.json");
    let text = kronecker_qh::cells::CELLS_JSON.replacen("\"degree\": 21", "\"degree\": 20", 1);
    std::fs::write(&cells, text).unwrap();
    let o = kqh(&["verify", "--cells", cells.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("checksum mismatch"));

    let o = kqh(&["poset", "--cells", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chevalley_formulas() {
    let o = kqh(&["chevalley"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert!(text.contains("c1 * e2 = 2 f1 + f2 + 2 f3 + q (3 [Y])\n"));
    assert!(text.ends_with("c1 * [point] = q (3 h2) + q^2 (2 c1)\n"));
    let v: Value = serde_json::from_str(&stdout(&kqh(&["chevalley", "--format", "json"]))).unwrap();
    assert_eq!(v[9]["product"], "[point] + q (f1 + f3) + q^2 (2 [Y])");
}

#[test]
fn tables() {
    let csv = stdout(&kqh(&["table", "--kind", "classical"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 1 + 13 * 13);
    assert_eq!(lines[0], "left,right,product");
    assert!(lines.contains(&"c1,c1,c1^2"));
    let quantum = stdout(&kqh(&["table"]));
    assert!(quantum.lines().any(|l| l.starts_with("c1,pt,") && l.contains("q")));
    let at_one = stdout(&kqh(&["table", "--q", "1"]));
    assert!(!at_one.contains('q'));

    let v: Value = serde_json::from_str(&stdout(&kqh(&["table", "--format", "json"]))).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 13);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 169);
    // c1 * c1^2 = c1^3 + 3q: coordinate of [Y] is 3q.
    let row = rows.iter().find(|r| r["left"] == "c1" && r["right"] == "c1^2").unwrap();
    assert_eq!(row["coords"][0], serde_json::json!(["0", "3"]));
}

#[test]
fn quantize_and_poset() {
    let line = stdout(&kqh(&["quantize", "--class", "line"]));
    assert!(line.starts_with("1/14 * c1 c2^2"));
    let v: Value = serde_json::from_str(&stdout(&kqh(&["quantize", "--class", "c1^3", "--format", "json"]))).unwrap();
    assert_eq!(v["class"], "4 c1d2 - 3 c3");
    assert!(v["representative"].as_str().unwrap().contains('q'));
    assert_eq!(kqh(&["quantize", "--class", "c1 + c2"]).status.code(), Some(2));

    let hasse = stdout(&kqh(&["poset"]));
    assert!(hasse.starts_with("dim 6: m\n"));
    assert!(hasse.contains("dim 4: e1  e2  e3"));
    let diagram = stdout(&kqh(&["poset", "--diagram", "chevalley"]));
    assert!(diagram.contains("c1.p = 2 e1 + e2 + 2 e3"));
    let json = stdout(&kqh(&["poset", "--format", "json"]));
    assert_eq!(json, kronecker_qh::cells::CELLS_JSON);
}
