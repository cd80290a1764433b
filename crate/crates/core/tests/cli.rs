use std::process::Command;

fn anisofem(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_anisofem")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn solve_reports_case() {
    let (code, out) = anisofem(&["solve", "--problem", "sine", "--a", "1", "--nx", "20", "--ny", "40"]);
    assert_eq!(code, 0);
    assert!(out.contains("error 1.01e-1"), "{out}");
    assert!(out.contains("bubble: E 2.80e-1 eff 2.78"), "{out}");
}

#[test]
fn csv_has_header_and_one_row() {
    let (code, out) = anisofem(&["solve", "--problem", "layer", "--eps", "0.25", "--nx", "8", "--ny", "16", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("region,"));
}

#[test]
fn identities_suite_passes() {
    let (code, out) = anisofem(&["verify", "--suite", "identities"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    assert!(out.contains("max vertex residual"));
}

#[test]
fn exit_codes() {
    assert_eq!(anisofem(&["--help"]).0, 0);
    assert_eq!(anisofem(&["solve", "--problem", "bogus"]).0, 1);
    assert_eq!(anisofem(&["solve", "--eps", "2", "--problem", "layer"]).0, 1);
    assert_eq!(anisofem(&["solve", "--solver", "pcg", "--max-iter", "1", "--nx", "10", "--ny", "10"]).0, 2);
}

#[test]
fn mesh_dump_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mesh.txt");
    let (code, _) = anisofem(&["mesh", "--nx", "3", "--ny", "5", "--eps", "0.25", "--dump", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("nodes 24\n"));
}
