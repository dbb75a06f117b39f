use hochschild::exact::HomologyTable;
use hochschild::gca::{b_prime, e2_page, FreeGCA, Spectrum, DEFAULT_BOUND};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochschild")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// A scratch directory unique to one test.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hochschild-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const DUAL2: &str = r#"{"coefficients":"F2","basis":["1","x"],"unit":"1","weights":{"x":1},"augmentation":{"1":1,"x":0}}"#;
const GROUND: &str = r#"{"coefficients":"F2","basis":["1"],"unit":"1","augmentation":{"1":1}}"#;
const ZI: &str = r#"{"coefficients":"Z","basis":["1","i"],"unit":"1","mult":[["i","i",[[-1,"1"]]]]}"#;

#[test]
fn dual_numbers_on_the_circle_from_a_file() {
    let dir = scratch("dual");
    let a = write(&dir, "dual2.json", DUAL2);
    let o = bin(&["--format", "json", "hh", "--model", "s1", "--algebra", &a, "--max-degree", "8"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let table: HomologyTable = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(table.ranks(), vec![2; 9]);
}

#[test]
fn gaussian_integers_over_z() {
    let dir = scratch("zi");
    let a = write(&dir, "zi.json", ZI);
    let o = bin(&["--format", "json", "hh", "--model", "s1", "--algebra", &a, "--coefficients", "Z", "--max-degree", "7"]);
    assert!(o.status.success());
    let table: HomologyTable = serde_json::from_str(&stdout(&o)).unwrap();
    let groups: Vec<String> = table.degrees.iter().map(|e| e.to_string()).collect();
    assert_eq!(groups, ["Z^2", "(Z/2)^2", "0", "(Z/2)^2", "0", "(Z/2)^2", "0", "(Z/2)^2"]);
}

#[test]
fn relative_pair_with_a_chain_of_files() {
    let dir = scratch("chain");
    let a = write(&dir, "a.json", DUAL2);
    let b = write(&dir, "b.json", GROUND);
    let c = write(&dir, "c.json", GROUND);
    let chain = format!("{a},{b},{c}");
    let o = bin(&["--format", "json", "hh", "--pair", "delta2,boundary", "--chain", &chain, "--max-degree", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let table: HomologyTable = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(table.ranks().len(), 4);
    assert_eq!(table.ranks()[0], 1);
}

#[test]
fn tower_lists_the_fourth_stage() {
    let o = bin(&["--format", "json", "tor-tower", "--base", "poly:x:0", "--steps", "3", "--max-degree", "20"]);
    assert!(o.status.success());
    let stages: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(stages.len(), 4);
    let last = FreeGCA::from_json(&stages[3].to_string()).unwrap();
    assert_eq!(last.degrees(), b_prime(2, 4, 20).unwrap().degrees());
}

#[test]
fn e2_page_round_trips_through_json() {
    let o = bin(&["--format", "json", "e2", "--spectrum", "ko", "--order", "2"]);
    assert!(o.status.success());
    let page = FreeGCA::from_json(&stdout(&o)).unwrap();
    assert_eq!(page, e2_page(Spectrum::Ko, 2, DEFAULT_BOUND).unwrap());
}

#[test]
fn collapse_reads_a_page_file() {
    let dir = scratch("page");
    let page = write(
        &dir,
        "page.json",
        r#"{"p":2,"generators":[{"name":"x","kind":"divpow","degree":6,"filtration":1},
                                 {"name":"z","kind":"ext","degree":23,"filtration":1}]}"#,
    );
    let o = bin(&["collapse", "--page", &page]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("collapses by degrees: false"), "{text}");
    assert!(text.contains("d^3: γ4(x)"), "{text}");
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let o = bin(&["verify", "--all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 failed"));
}

#[test]
fn verify_json_reports_round_trip() {
    let o = bin(&["--format", "json", "verify", "juggle-identity", "monoid-etale"]);
    assert!(o.status.success());
    let reports: Vec<hochschild::verify::CheckReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.passed));
}

#[test]
fn models_lists_level_counts() {
    let o = bin(&["models", "--levels", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let circle = text.lines().find(|l| l.starts_with("s1 ")).unwrap();
    assert!(circle.contains("1 2 3"), "{circle}");
}

#[test]
fn thread_count_does_not_change_results() {
    let args = ["hh", "--model", "s2", "--algebra", "trunc:3:3", "--max-degree", "4"];
    let one = bin(&[&["--threads", "1"], &args[..]].concat());
    let many = bin(&[&["--threads", "4"], &args[..]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn bad_inputs_exit_with_two() {
    let dir = scratch("bad");
    let broken = write(&dir, "broken.json", "{\"coefficients\": \"F2\",\n \"basis\": [");
    for args in [
        vec!["hh", "--model", "s1", "--algebra", "missing.json"],
        vec!["hh", "--model", "s1", "--algebra", &broken],
        vec!["hh", "--model", "klein", "--algebra", "fp"],
        vec!["verify", "no-such-check"],
        vec!["e2", "--spectrum", "mu"],
        vec!["frobnicate"],
    ] {
        let o = bin(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "), "{args:?}");
    }
    let o = bin(&["hh", "--model", "s1", "--algebra", &broken]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn size_guard_aborts_cleanly() {
    let o = bin(&["hh", "--model", "s1", "--algebra", "trunc:2:2", "--max-degree", "30", "--size-guard", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size guard"));
    let o = Command::new(env!("CARGO_BIN_EXE_hochschild"))
        .args(["hh", "--model", "s1", "--algebra", "trunc:2:2", "--max-degree", "30"])
        .env("HOCHSCHILD_SIZE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let o = bin(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("tor-tower"));
}
