//! Drives the `zkring` binary as a subprocess.
//!
//! Golden files live in `tests/golden`; run with `UPDATE_GOLDEN=1` to rewrite
//! them after an intentional format change.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const P28_MODEL: &str = "3,3,6;5,7*8;6,6*8";

fn zkring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zkring"))
        .args(args)
        .env_remove("ZKRING_THREADS")
        .output()
        .expect("spawn zkring")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("zkring-cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

fn check_golden(args: &[&str], name: &str, expected_code: i32) {
    let o = zkring(args);
    assert_eq!(code(&o), expected_code, "{args:?}: {}", stderr(&o));
    golden(name, &stdout(&o));
}

#[test]
fn golden_construct() {
    check_golden(&["construct", "p28-8"], "p28-8.cplx", 0);
    check_golden(&["construct", "polygon", "5"], "polygon5.cplx", 0);
    check_golden(&["construct", "truncated-simplex", "3", "2"], "truncated-3-2.cplx", 0);
}

#[test]
fn golden_reports() {
    check_golden(&["zk", "p28-8"], "zk-p28-8.txt", 0);
    check_golden(&["zk", "p28-8", "--json", "--bigraded"], "zk-p28-8.json", 0);
    check_golden(&["betti", "p28-8", "--json"], "betti-p28-8.json", 0);
    check_golden(&["classify", "p28-8"], "classify-p28-8.txt", 0);
    check_golden(&["verify", "p28-8", "--model", P28_MODEL], "verify-p28-8.txt", 0);
    check_golden(&["crosscheck", "polygon:5", "--json"], "crosscheck-polygon5.json", 0);
    check_golden(&["zk", "polygon:5", "--method", "koszul", "--bigraded"], "zk-polygon5-koszul.txt", 0);
    check_golden(&["paper"], "checklist.txt", 0);
}

#[test]
fn the_construction_has_eighteen_facets() {
    let o = zkring(&["construct", "p28-8"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("facet")).count(), 18);
    assert!(text.starts_with("vertices 8\n"));
}

#[test]
fn p28_betti_table() {
    let o = zkring(&["zk", "p28-8", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let table: Vec<(u64, u64)> = v["total"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["p"].as_u64().unwrap(), e["rank"].as_u64().unwrap()))
        .collect();
    assert_eq!(table, [(0, 1), (3, 2), (5, 8), (6, 18), (7, 8), (9, 2), (12, 1)]);
}

#[test]
fn methods_report_the_same_totals() {
    let totals = |method: &str| {
        let o = zkring(&["zk", "p28-8", "--json", "--method", method]);
        assert_eq!(code(&o), 0, "{method}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["total"].clone()
    };
    let h = totals("hochster");
    assert_eq!(totals("koszul"), h);
    assert_eq!(totals("taylor"), h);
    assert_eq!(totals("all"), h);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["zk", "p28-8", "--json", "--bigraded"];
    let base = stdout(&zkring(&args));
    for t in ["1", "2", "4"] {
        let mut a = args.to_vec();
        a.extend(["--threads", t]);
        assert_eq!(stdout(&zkring(&a)), base, "--threads {t}");
    }
    let via_env = Command::new(env!("CARGO_BIN_EXE_zkring"))
        .args(["ring", "p28-8"])
        .env("ZKRING_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), stdout(&zkring(&["ring", "p28-8", "--threads", "3"])));
}

#[test]
fn emitted_complexes_round_trip() {
    let path = scratch("p28-8.cplx");
    let o = zkring(&["construct", "p28-8", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let file = path.to_str().unwrap();
    for cmd in [&["zk", "--json", "--bigraded"][..], &["classify", "--json"], &["ring"], &["betti"]] {
        let mut from_file = vec![cmd[0], file];
        from_file.extend(&cmd[1..]);
        let mut from_builtin = vec![cmd[0], "p28-8"];
        from_builtin.extend(&cmd[1..]);
        assert_eq!(stdout(&zkring(&from_file)), stdout(&zkring(&from_builtin)), "{cmd:?}");
    }
    let again = scratch("p28-8-again.cplx");
    zkring(&["construct", "join", file, "simplex-boundary:1", "--out", again.to_str().unwrap()]);
    let joined = std::fs::read_to_string(&again).unwrap();
    assert!(joined.starts_with("vertices 10\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&zkring(&["verify", "p28-8", "--model", P28_MODEL])), 0);
    assert_eq!(code(&zkring(&["verify", "p28-8", "--model", "5,7*9;6,6*9"])), 1);
    assert_eq!(code(&zkring(&["verify", "p28-8", "--model", "3,,3"])), 2);
    assert_eq!(code(&zkring(&["crosscheck", "polygon:5"])), 0);
    assert_eq!(code(&zkring(&["classify", "join:polygon:5+simplex-boundary:1"])), 1);
    assert_eq!(code(&zkring(&["classify", "cross-polytope:2"])), 0);
    assert_eq!(code(&zkring(&["zk", "absent.cplx"])), 2);
    assert_eq!(code(&zkring(&["zk"])), 2);
    assert_eq!(code(&zkring(&["frobnicate"])), 2);
    assert_eq!(code(&zkring(&["zk", "polygon:5", "--threads", "0"])), 2);
    assert_eq!(code(&zkring(&["construct", "polygon", "2"])), 2);
    assert_eq!(code(&zkring(&["--help"])), 0);
}

#[test]
fn parse_errors_name_the_line() {
    let path = scratch("broken.cplx");
    std::fs::write(&path, "vertices 3\nfacet 1 2\nfacet 2 7\n").unwrap();
    let o = zkring(&["betti", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn vertex_cap() {
    let o = zkring(&["zk", "polygon:25"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--max-vertices"));
    let o = zkring(&["zk", "polygon:5", "--max-vertices", "30"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    let o = zkring(&["zk", "polygon:5", "--max-vertices", "4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn checklist_command_json() {
    let o = zkring(&["paper", "--json", "--threads", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let items = v["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["passed"] == true));
    assert!(items.iter().any(|i| i["name"].as_str().unwrap().starts_with("truncated simplex (2, 2)")));
}

#[test]
fn out_flag_writes_reports() {
    let path = scratch("zk.txt");
    let o = zkring(&["zk", "polygon:4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("   6       1  -"));
}
