use std::process::{Command, Output};

fn wbrauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbrauer")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn product_with_a_loop() {
    let e = "wbd 1,1 : 1-2,1'-2'";
    let o = wbrauer(&["mul", "--field", "F5;2", e, e]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2 * wbd 1,1 : 1-2,1'-2'");
}

#[test]
fn identity_times_diagram() {
    let o = wbrauer(&["mul", "--field", "Q;3", "wbd 2,1 : 1-1',2-2',3-3'", "wbd 2,1 : 1-3,2-2',1'-3'"]);
    assert_eq!(stdout(&o).trim(), "wbd 2,1 : 1-3,2-2',1'-3'");
    let o = wbrauer(&["mul", "--field", "Q;3", "--format", "json", "wbd 1,1 : 1-1',2-2'", "wbd 1,1 : 1-1',2-2'"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["product"], "wbd 1,1 : 1-1',2-2'");
}

#[test]
fn malformed_diagram_is_a_parse_error() {
    let o = wbrauer(&["mul", "wbd 1,1 : 1-2,1'-", "wbd 1,1 : 1-2,1'-2'"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1'-"));
}

#[test]
fn shape_mismatch_is_a_hypothesis_violation() {
    let o = wbrauer(&["mul", "wbd 1,1 : 1-2,1'-2'", "wbd 2,1 : 1-1',2-2',3-3'"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_reports_in_the_schema() {
    let o = wbrauer(&["decompose", "--field", "Q;5", "--rt", "1,1", "--label", "1:(|)", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algebra"]["r"], 1);
    assert_eq!(v["algebra"]["field"], "Q");
    assert_eq!(v["algebra"]["delta"], "5");
    assert_eq!(v["label"]["l"], 1);
    assert_eq!(v["summands"].as_array().unwrap().len(), 1);
    assert_eq!(v["filtration"][0]["label"], "1:(|)");
    assert_eq!(v["seed"], 7);
}

#[test]
fn semisimple_decomposition_matches_cells() {
    let o = wbrauer(&["decompose", "--field", "Q;5", "--rt", "2,1", "--label", "0:(2|1)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: Vec<u64> = v["summands"].as_array().unwrap().iter().map(|s| s["dim"].as_u64().unwrap()).collect();
    let cells: Vec<u64> = v["filtration"].as_array().unwrap().iter().map(|s| s["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, cells);
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--field", "F5;2", "--rt", "2,2", "--label", "1:(1|1)", "--seed", "3"];
    assert_eq!(stdout(&wbrauer(&args)), stdout(&wbrauer(&args)));
}

#[test]
fn characteristic_three_is_refused() {
    let o = wbrauer(&["decompose", "--field", "F3;1", "--rt", "1,1", "--label", "1:(|)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2,3"));
}

#[test]
fn bad_label_and_unknown_suite() {
    let o = wbrauer(&["decompose", "--rt", "1,1", "--label", "1:(|"]);
    assert_eq!(o.status.code(), Some(4));
    let o = wbrauer(&["decompose", "--rt", "1,1", "--label", "0:(2|1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(wbrauer(&["verify", "nope"]).status.code(), Some(4));
}

#[test]
fn verify_tables() {
    let o = wbrauer(&["verify", "stabilizers", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("suite,case,passed,detail"));
    assert!(text.contains("σ=(1 3 4)"));
    let o = wbrauer(&["verify", "dims"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}
