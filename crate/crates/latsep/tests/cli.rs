//! The `latsep` binary end to end.

use std::process::{Command, Output};

fn latsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latsep"))
        .args(args)
        .env_remove("LATSEP_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn verdicts(o: &Output) -> Vec<(String, String)> {
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json output");
    v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let verdict = &o["report"]["verdict"];
            let text = verdict.as_str().map(str::to_string).unwrap_or_else(|| verdict.to_string());
            (o["check"].as_str().unwrap().to_string(), text)
        })
        .collect()
}

#[test]
fn list_and_describe() {
    let o = latsep(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    for id in ["fig1", "fig2", "fig3", "fig4", "cofinite_N", "chain2"] {
        assert!(stdout(&o).contains(id), "{id}");
    }
    let o = latsep(&["describe", "fig3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("boolean_BL"));
    assert_eq!(latsep(&["describe", "nope"]).status.code(), Some(3));
}

#[test]
fn fig1_subfitness() {
    let o = latsep(&["run", "fig1", "--checks", "subfit_L,subfit_BL", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let v = verdicts(&o);
    assert_eq!(v[0].0, "subfit_L");
    assert!(v[0].1.contains("false"), "{v:?}");
    assert!(v[1].1.contains("verified"), "{v:?}");
}

#[test]
fn fig4_regularity() {
    let o = latsep(&["run", "fig4", "--checks", "regular_L,regular_BL", "--format", "md"]);
    assert_eq!(o.status.code(), Some(1));
    let md = stdout(&o);
    assert!(md.starts_with("# fig4 (bound 2)"));
    assert!(md.contains("| regular_L | false |"), "{md}");
    assert!(md.contains("| regular_BL | verified-at-bound(2) |"), "{md}");
}

#[test]
fn chain_from_file() {
    let path = std::env::temp_dir().join(format!("latsep-chain-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"elements":["0","a","1"],"leq":[["0","a"],["a","1"],["0","1"]]}"#).unwrap();
    let o = latsep(&["run", "--file", path.to_str().unwrap(), "--checks", "all"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v = verdicts(&o);
    let get = |c: &str| v.iter().find(|(n, _)| n == c).unwrap().1.clone();
    assert!(get("vsubfit").contains("false"));
    assert!(get("boolean").contains("false"));
    assert!(get("proheyting").contains("true"));
}

#[test]
fn bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_latsep"))
        .args(["run", "fig2", "--checks", "proheyting", "--format", "md"])
        .env("LATSEP_BOUND", "1")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("# fig2 (bound 1)"));
}

#[test]
fn input_errors() {
    assert_eq!(latsep(&["run", "fig1", "--checks", "nope"]).status.code(), Some(3));
    assert_eq!(latsep(&["run", "fig1", "--bound", "9"]).status.code(), Some(3));
    assert_eq!(latsep(&["run", "fig1", "--format", "xml"]).status.code(), Some(3));
    assert_eq!(latsep(&["run", "--file", "/nonexistent.json"]).status.code(), Some(3));
    assert_eq!(latsep(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn all_true_exits_zero() {
    let o = latsep(&["run", "antichain3", "--checks", "subfit_L,wsubfit_L,boolean_L"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    for f in ["json", "md", "dot"] {
        let a = latsep(&["run", "fig4", "--format", f]);
        let b = latsep(&["run", "fig4", "--format", f]);
        assert_eq!(a.stdout, b.stdout, "{f}");
        assert_eq!(a.status.code(), Some(1), "{f}");
    }
}

#[test]
fn matrix_small() {
    let o = latsep(&["verify-matrix", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disagreements"), "{}", stdout(&o));
}
