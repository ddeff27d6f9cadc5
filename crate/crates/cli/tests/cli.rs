//! The binary's exit codes, formats and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaops")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--suite", "all", "--order", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--index", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--index", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "--k", "2", "--m", "3", "--window", "2"]).status.code(), Some(2));
    assert_eq!(run(&["operator", "--which", "d9"]).status.code(), Some(2));
    assert_eq!(run(&["rm", "--max", "2"]).status.code(), Some(0));
}

#[test]
fn symbolic_and_numeric_suites_pass() {
    let o = run(&["verify", "--suite", "symbolic", "--order", "6", "--degree", "6", "--trials", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
    }
    let o = run(&["verify", "--suite", "numeric", "--digits", "30", "--kmax", "3", "--mmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.trim_start().starts_with("pass")));
}

#[test]
fn reduce_is_deterministic_and_matches_known_cases() {
    let a = run(&["reduce", "--k", "3", "--m", "2", "--format", "json"]);
    let b = run(&["reduce", "--k", "3", "--m", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);

    let v: serde_json::Value = serde_json::from_slice(&run(&["reduce", "--k", "0", "--m", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["P"], serde_json::json!([{"coeff": "-1/2", "zeta": [2]}]));
    assert_eq!(v["corrections"], serde_json::json!([]));

    let v: serde_json::Value = serde_json::from_slice(&run(&["reduce", "--k", "1", "--m", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["P"], serde_json::json!([{"coeff": "1/2", "zeta": [3]}]));
    assert_eq!(v["corrections"], serde_json::json!([{"coeff": "-1/2", "n": 2, "target": {"bar": 3, "ones": 0}}]));
}

#[test]
fn normalized_basis_has_only_zeta2_among_evens() {
    let out = run(&["reduce", "--k", "2", "--m", "3", "--format", "json", "--normalize-even"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for t in v["P"].as_array().unwrap() {
        for z in t["zeta"].as_array().unwrap() {
            let z = z.as_u64().unwrap();
            assert!(z == 2 || z % 2 == 1, "ζ({z}) survived normalization");
        }
    }
    assert_eq!(v["config"]["normalize_even"], true);
}

#[test]
fn config_file_supplies_defaults() {
    let path = std::env::temp_dir().join(format!("zetaops-{}.conf", std::process::id()));
    std::fs::write(&path, "# test\nformat = json\ndigits = 25\n").unwrap();
    let o = run(&["eval", "--index", "-2", "--config", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["digits"], 25);
    assert!(v["value"].as_str().unwrap().starts_with("-0.82246703342411"));
    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(run(&["rm", "--max", "1", "--config", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn latex_output() {
    let o = run(&["reduce", "--k", "2", "--m", "1", "--format", "latex"]);
    assert!(stdout(&o).starts_with("\\zeta(1,1,\\overline{2}) - \\frac{1}{2} \\zeta(1,\\overline{3}) = "));
    let o = run(&["rm", "--max", "1", "--format", "latex"]);
    assert_eq!(stdout(&o), "r_{1} = \\frac{3}{32}\n");
}
