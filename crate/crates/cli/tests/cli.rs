use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn minw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn classify_sl4() {
    let o = minw(&["classify", "sl(4)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(strings(&r["collapsing"]), ["-2", "-1"]);
    assert_eq!(strings(&r["conformal_noncollapsing"]), ["-8/3", "-3/2"]);
    assert_eq!(strings(&r["p_of_k"]), ["2", "3", "1"]);
}

#[test]
fn classify_several_gives_an_array() {
    let o = minw(&["classify", "sl(4)", "osp(5|2)", "F(4):sl2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(&o);
    let names: Vec<&str> = r
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["algebra"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 3);
    assert_eq!(names[0], "sl(4)");
}

#[test]
fn excluded_and_malformed_algebras_are_usage_errors() {
    let o = minw(&["classify", "sl(4|2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("excluded"), "{}", stderr(&o));

    let o = minw(&["classify", "sq(4)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("'sq'"), "{}", stderr(&o));

    assert_eq!(minw(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(minw(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn d21a_minus_half_has_no_conformal_levels() {
    let o = minw(&["classify", "D(2,1;-1/2)"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert!(r["conformal_noncollapsing"].as_array().unwrap().is_empty());
    let reasons: Vec<&str> = r["excluded"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["reason"].as_str().unwrap())
        .collect();
    assert!(reasons.contains(&"sugawara_pole"), "{reasons:?}");
}

#[test]
fn chains() {
    let o = minw(&["chain", "sl(8)", "-4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = json(&o);
    let steps: Vec<(String, String)> = c["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            (
                s["algebra"].as_str().unwrap().into(),
                s["level"].as_str().unwrap().into(),
            )
        })
        .collect();
    let expected = [
        ("sl(8)", "-4"),
        ("sl(6)", "-3"),
        ("sl(4)", "-2"),
        ("sl(2)", "-1"),
    ];
    assert_eq!(steps.len(), 4);
    for ((a, k), (ea, ek)) in steps.iter().zip(expected) {
        assert_eq!((a.as_str(), k.as_str()), (ea, ek));
    }
    assert_eq!(c["end_kind"], "Virasoro");
    assert_eq!(c["end"], "Virasoro c=1");

    let c = json(&minw(&["chain", "so(14)", "-2"]));
    assert_eq!(c["steps"][1]["algebra"], "sl(2)");
    assert_eq!(c["steps"][1]["level"], "3");

    let o = minw(&["chain", "sl(4)", "-3/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("not a collapsing level"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn formats() {
    let o = minw(&["classify", "sl(5)", "--format", "csv"]);
    let s = stdout(&o);
    assert!(
        s.starts_with("algebra,h_vee,p_of_k,collapsing,trivial,conformal_noncollapsing,excluded\n"),
        "{s}"
    );
    assert!(s.contains("sl(5),5,"), "{s}");

    let o = minw(&["classify", "sl(5)", "--format", "markdown"]);
    let s = stdout(&o);
    assert!(s.starts_with("## sl(5)\n"), "{s}");
    assert!(
        s.contains("| conformal non-collapsing | {-10/3, -2} |"),
        "{s}"
    );
    assert!(!s.contains('.'), "rationals must not be decimals: {s}");
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = minw(&["classify", "sp(4)", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["algebra"], "sp(4)");
}

#[test]
fn output_does_not_depend_on_jobs() {
    let a = minw(&["catalog", "--jobs", "1"]);
    let b = minw(&["catalog", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = minw(&["verify", "level-equation", "--jobs", "1", "--format", "csv"]);
    let b = minw(&["verify", "level-equation", "--jobs", "4", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fast_suites_pass() {
    for suite in [
        "pk",
        "bracket-reduction",
        "level-equation",
        "trivial-levels",
        "conformal-levels",
    ] {
        let o = minw(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        let r = json(&o);
        assert_eq!(r["failed"], 0);
        assert!(r["passed"].as_u64().unwrap() > 0);
    }
}

#[test]
fn realize_command() {
    let o = minw(&["verify", "realize-4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json(&o)["cases"].as_array().unwrap().len(), 5);

    let o = minw(&["realize", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("equals conformal weight 3"),
        "{}",
        stderr(&o)
    );
    assert_eq!(minw(&["verify", "realize-3"]).status.code(), Some(2));
}

fn golden(dir: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join("catalog.json")).unwrap()).unwrap()
}

#[test]
fn golden_workflow() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();

    let o = minw(&["verify", "conformal-levels", "--goldens", d]);
    assert_eq!(o.status.code(), Some(2), "missing goldens is a usage error");
    assert!(stderr(&o).contains("--regenerate-goldens"));

    let o = minw(&[
        "verify",
        "conformal-levels",
        "--goldens",
        d,
        "--regenerate-goldens",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = golden(dir.path());
    assert_eq!(
        g["header"]["generated_by"],
        "minw verify conformal-levels --regenerate-goldens"
    );
    let committed: Value = serde_json::from_str(
        &std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/goldens/catalog.json"))
            .unwrap(),
    )
    .unwrap();
    assert_eq!(
        g["records"], committed["records"],
        "committed goldens are stale"
    );

    // Corrupt one record: sl(4) loses −8/3.
    let mut g = g;
    let rec = g["records"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| r["algebra"] == "sl(4)")
        .unwrap();
    rec["conformal_noncollapsing"] = serde_json::json!(["-3/2"]);
    std::fs::write(
        dir.path().join("catalog.json"),
        serde_json::to_string(&g).unwrap(),
    )
    .unwrap();
    let o = minw(&["verify", "conformal-levels", "--goldens", d]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["failed"], 1);
    let bad = r["cases"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["passed"] == false)
        .unwrap();
    assert_eq!(bad["case"], "sl(4)");
    assert!(
        bad["detail"]
            .as_str()
            .unwrap()
            .contains("unexpected [\"-8/3\"]"),
        "{bad}"
    );
}
