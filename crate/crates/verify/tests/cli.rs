use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

#[test]
fn verify_single_case_json() {
    let o = hurwitz(&["verify", "--id", "humbert-double-sum", "--order", "50", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["id"], "humbert-double-sum");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["certified_order"], 50);
    assert!(v[0]["first_mismatch"].is_null());
}

#[test]
fn allow_fail_case_does_not_change_exit_code() {
    let o = hurwitz(&["verify", "--id", "f151-expansion", "--order", "8", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("id,status"));
}

#[test]
fn unknown_id_is_usage_error() {
    let o = hurwitz(&["verify", "--id", "no-such-id"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-id"));
}

#[test]
fn bad_flag_is_usage_error() {
    assert_eq!(hurwitz(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn config_file_sets_order() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "default_order = 12\njobs = 2").unwrap();
    let path = f.path().to_string_lossy().into_owned();
    let o = hurwitz(&["verify", "--id", "a-appell-lerch", "--config", &path, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["certified_order"], 12);
    let o = hurwitz(&["verify", "--id", "a-appell-lerch", "--config", &path, "--order", "15", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["certified_order"], 15);
}

#[test]
fn list_prints_every_case() {
    let o = hurwitz(&["verify", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() >= 40);
    assert!(stdout(&o).contains("f151-expansion"));
}

#[test]
fn hurwitz_number() {
    let o = hurwitz(&["hurwitz", "23"]);
    assert!(stdout(&o).contains("H(23) = 3"));
    let o = hurwitz(&["hurwitz", "3"]);
    assert!(stdout(&o).contains("H(3) = 1/3"));
}

#[test]
fn series_family() {
    let o = hurwitz(&["series", "--family", "eulerian:A", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1\n2 2\n3 3\n# through q^3\n");
    assert_eq!(hurwitz(&["series", "--family", "nope"]).status.code(), Some(2));
}

#[test]
fn partitions() {
    assert_eq!(stdout(&hurwitz(&["partitions", "--kind", "p", "--n", "3"])).trim(), "3");
    let listed = stdout(&hurwitz(&["partitions", "--kind", "q", "--n", "3", "--list"]));
    assert_eq!(listed.lines().count(), 3);
}

#[test]
fn oeis_fixtures_agree() {
    for (seq, file) in [("A238872", "A238872.txt"), ("A321440", "A321440.txt")] {
        let o = hurwitz(&["oeis", "--seq", seq, "--bfile", &fixture(file), "--max", "120", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{seq}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v[0]["status"], "pass");
        assert_eq!(v[0]["certified_order"], 120);
    }
}

#[test]
fn oeis_malformed_line_is_reported() {
    let o = hurwitz(&["oeis", "--seq", "A238872", "--bfile", &fixture("malformed.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = hurwitz(&["oeis", "--seq", "A238872", "--bfile", "/no/such/file"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oeis_wrong_value_fails() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "1 1\n2 1\n3 4").unwrap();
    let o = hurwitz(&["oeis", "--seq", "A238872", "--bfile", &f.path().to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
}
