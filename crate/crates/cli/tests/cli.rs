use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatcohom")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    corpus(name).to_str().unwrap().to_string()
}

#[test]
fn table_mode_prints_the_worked_example_rows() {
    let o = run(&["report", &path("example1.json"), "--format", "table"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    for row in [
        "| (1,0) ||  3  |  3   |  2   |  4   |",
        "| (2,0) ||  4  |  4   |  5   |  5   |",
        "| (3,0) ||  3  |  3   |  4   |  2   |",
        "| (1,0) || 0 | 0 | 1 | 0 | 1 | 0 |",
        "| (2,0) || 1 | 1 | 1 | 1 | 1 | 1 |",
        "| (3,0) || 0 | 1 | 0 | 1 | 0 | 0 |",
    ] {
        assert!(out.contains(row), "missing row {row}\n{out}");
    }
    assert!(out.contains("HKT: no"));
}

#[test]
fn json_and_table_modes_carry_the_same_numbers() {
    let json = stdout(&run(&["report", &path("example1.json"), "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let table = stdout(&run(&["report", &path("example1.json")]));
    for row in value["table"]["rows"].as_array().unwrap() {
        let p = row["p"].as_u64().unwrap();
        let cells = format!("| ({p},0) ||    {}    |    {}    | {} |", row["dim_e1"], row["dim_e2"], row["delta"]);
        assert!(table.contains(&cells), "{cells}");
    }
}

#[test]
fn structured_output_is_deterministic() {
    let args = ["report", &path("example2.json"), "--param", "t=1/2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn hkt_at_one_half_prints_a_certificate() {
    let o = run(&["hkt", &path("example2.json"), "--param", "t=1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("HKT: yes"), "{out}");
    assert!(out.contains("certificate:") && out.contains("Ω = phi12+phi34"));
}

#[test]
fn hkt_honours_search_bounds() {
    let o = run(&[
        "hkt",
        &path("example2.json"),
        "--param",
        "t=1/2",
        "--search-denominator-bound",
        "1",
        "--search-coeff-bound",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["search"]["grid_size"], 3u64.pow(6));
}

#[test]
fn exit_codes() {
    let unbound = run(&["report", &path("example2.json")]);
    assert_eq!(unbound.status.code(), Some(2));
    assert!(stderr(&unbound).contains("parameter t requires --param"));
    assert_eq!(run(&["report", &path("example2.json"), "--param", "t=half"]).status.code(), Some(2));
    assert_eq!(run(&["report", &path("example1.json"), "--param", "s=1"]).status.code(), Some(2));
    assert_eq!(run(&["report", "/nonexistent.json"]).status.code(), Some(2));
    // the existence criteria are stated for eight dimensions only
    assert_eq!(run(&["hkt", &path("example3.json")]).status.code(), Some(1));
}

#[test]
fn validation_failure_exits_one() {
    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(corpus("example1.json")).unwrap()).unwrap();
    // I·e^1 = e^1 breaks I² = −1
    doc["I"][0] = serde_json::json!([1, 0, 0, 0, 0, 0, 0, 0]);
    let file = std::env::temp_dir().join(format!("broken-{}.json", std::process::id()));
    std::fs::write(&file, doc.to_string()).unwrap();
    let o = run(&["validate", file.to_str().unwrap()]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn other_subcommands() {
    let o = run(&["validate", &path("abelian.json")]);
    assert!(stdout(&o).ends_with("valid\n"));
    let o = run(&["decompose", &path("example3.json")]);
    assert!(stdout(&o).contains("intersection 2, sum 7, complement 2"));
    let o = run(&["pairing", &path("example1.json"), "--p", "1"]);
    assert!(stdout(&o).contains("nondegenerate: yes"));
    let o = run(&["suite", &path("abelian.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}
