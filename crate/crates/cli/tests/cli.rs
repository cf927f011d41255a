use std::path::Path;
use std::process::Command;

use orbitkit::report::Report;
use orbitkit_cli::{CensusArtifacts, ClassifyArtifacts, CountArtifacts, FamilyArtifacts, RootsArtifacts, SectionArtifacts};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitkit")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Run a command with JSON output, validate it against its schema and round-trip the artifacts.
fn json_report<T: DeserializeOwned + Serialize>(schema_name: &str, args: &[&str]) -> (i32, Report, T) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = run(&full);
    assert!(code == 0 || code == 1, "exit {code}: {stderr}");
    let value: Value = serde_json::from_str(&stdout).unwrap();
    let validator = jsonschema::validator_for(&schema(schema_name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
    let report: Report = serde_json::from_value(value).unwrap();
    let artifacts: T = serde_json::from_value(report.artifacts.clone()).unwrap();
    assert_eq!(serde_json::to_value(&artifacts).unwrap(), report.artifacts);
    (code, report, artifacts)
}

#[test]
fn roots_a2() {
    let (code, _, a) = json_report::<RootsArtifacts>("roots", &["roots", "--family", "A", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(a.roots.len(), 3);
    assert_eq!(a.order, "chevie");
    assert_eq!(a.roots.iter().map(|r| r.sing).collect::<Vec<_>>(), [0, 0, 2]);
    assert_eq!(a.brackets.len(), 1);
}

#[test]
fn roots_c4_and_invalid_rank() {
    let (_, _, a) = json_report::<RootsArtifacts>("roots", &["roots", "--family", "C", "--rank", "4"]);
    assert_eq!(a.roots.len(), 16);
    let (code, _, stderr) = run(&["roots", "--family", "D", "--rank", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid rank"));
}

#[test]
fn classify_outputs() {
    let (_, _, a) = json_report::<ClassifyArtifacts>("classify", &["classify", "--family", "A", "--rank", "2", "--dim", "2"]);
    assert_eq!(a.strings, ["LAS"]);
    assert_eq!(a.al_pairs, [vec![(2, 1)]]);
    let (_, _, b) = json_report::<ClassifyArtifacts>("classify", &["classify", "--family", "B", "--rank", "2", "--dim", "4"]);
    assert!(b.strings.is_empty());
    let (code, r, d) = json_report::<ClassifyArtifacts>("classify", &["classify", "--family", "D", "--rank", "8", "--dim", "6", "--verify"]);
    assert_eq!(code, 0);
    assert!(r.passed());
    assert!(d.verification.unwrap().weight_match);
}

#[test]
fn count_outputs() {
    let (code, _, a) = json_report::<CountArtifacts>("count", &["count", "--family", "A", "--rank", "3", "--e", "1"]);
    assert_eq!(code, 0);
    assert_eq!(a.polynomial, "v^3 + 3v^2 + 2v");
    assert_eq!(a.v.coeffs, [0, 2, 3, 1]);
    let (_, _, q) = json_report::<CountArtifacts>("count", &["count", "--family", "A", "--rank", "5", "--e", "0", "--var", "q"]);
    assert_eq!(q.polynomial, "q^5");
    let (_, _, b) = json_report::<CountArtifacts>("count", &["count", "--family", "B", "--rank", "7", "--e", "3", "--var", "q"]);
    assert_eq!(b.q.coeffs, [0, 0, 0, -6, 15, 5, -24, 2, 4, 3, 1]);
}

#[test]
fn count_published_source() {
    let (_, _, a) = json_report::<CountArtifacts>("count", &["count", "--family", "B", "--rank", "5", "--e", "2", "--source", "published"]);
    let (_, _, b) = json_report::<CountArtifacts>("count", &["count", "--family", "B", "--rank", "5", "--e", "2"]);
    assert_eq!(a.v, b.v);
}

#[test]
fn oracle_commands() {
    let (code, _, c) = json_report::<CensusArtifacts>("census", &["oracle", "census", "--family", "A", "--rank", "3", "-p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(c.total_orbits, 265);
    let (code, _, r) = json_report::<CensusArtifacts>("census", &["oracle", "census", "--family", "B", "--rank", "2", "-p", "5", "--method", "rank"]);
    assert_eq!(code, 0);
    assert_eq!(r.by_dimension.get(&2), Some(&24));
    let (code, _, s) = json_report::<SectionArtifacts>("section", &["oracle", "section", "--family", "A", "--rank", "2", "-p", "5", "--dim", "2"]);
    assert_eq!(code, 0);
    assert_eq!(s.met_once, 4);
    let (code, _, f) = json_report::<FamilyArtifacts>(
        "family",
        &["oracle", "family", "--family", "D", "--rank", "4", "-p", "7", "--support", "8,9,10", "--expect", "6"],
    );
    assert_eq!(code, 0);
    assert_eq!(f.ranks.get(&6), Some(&216));
}

#[test]
fn failing_verdict_sets_exit_code() {
    let dir = std::env::temp_dir().join(format!("orbitkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("strings.txt");
    std::fs::write(&file, "# none of the orbits\nSSS\n").unwrap();
    let (code, stdout, _) = run(&["oracle", "section", "--family", "A", "--rank", "2", "-p", "5", "--dim", "2", "--strings", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL set-section"));
    let (code, _, _) = run(&["oracle", "family", "--family", "D", "--rank", "4", "-p", "7", "--support", "8,9,10", "--expect", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn characteristic_and_budget_errors() {
    let (code, _, stderr) = run(&["oracle", "census", "--family", "A", "--rank", "3", "-p", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("too small"));
    let (code, _, stderr) = run(&["oracle", "census", "--family", "A", "--rank", "3", "-p", "5", "--safe"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, stderr) = run(&["oracle", "census", "--family", "A", "--rank", "4", "-p", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("budget"));
}

fn copy_dir(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for entry in std::fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        let target = to.join(entry.file_name());
        if entry.file_type().unwrap().is_dir() {
            copy_dir(&entry.path(), &target);
        } else {
            std::fs::copy(entry.path(), target).unwrap();
        }
    }
}

fn classify_with_data(dir: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_orbitkit"))
        .args(["--format", "json", "classify", "--family", "A", "--rank", "2", "--dim", "2", "--verify"])
        .env("ORBITKIT_DATA", dir)
        .output()
        .unwrap()
}

#[test]
fn data_override_directory() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data");
    let dir = std::env::temp_dir().join(format!("orbitkit-data-{}", std::process::id()));
    copy_dir(&src, &dir);
    let out = classify_with_data(&dir);
    assert_eq!(out.status.code(), Some(0));
    let table = dir.join("tables/dim2/A2.txt");
    let mut text = std::fs::read_to_string(&table).unwrap();
    text.push_str("\n# tampered\n");
    std::fs::write(&table, text).unwrap();
    let out = classify_with_data(&dir);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum"));
}

#[test]
fn text_format_and_jobs() {
    let (code, stdout, _) = run(&["--jobs", "2", "count", "--family", "A", "--rank", "3", "--e", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("polynomial: v^3 + 3v^2 + 2v"));
    assert!(stdout.contains("PASS nonnegative coefficients in v"));
}

#[test]
fn verify_all_reports_every_criterion() {
    let (code, r, _) = json_report::<Value>("verify-all", &["verify-all"]);
    assert_eq!(r.verdicts.len(), 9);
    assert_eq!(code, i32::from(!r.passed()));
    for id in [1, 2, 4, 6, 7, 8, 9] {
        assert!(r.verdicts[id - 1].passed, "{:?}", r.verdicts[id - 1]);
    }
}
