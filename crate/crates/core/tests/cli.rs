use std::path::Path;
use std::process::{Command, Output};

fn sjb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sjb"))
        .args(args)
        .env_remove("SJB_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    assert_eq!(
        sjb(&[
            "build",
            "--n",
            "2",
            "--kind",
            "sjb",
            "--out",
            path_str(&file)
        ])
        .status
        .code(),
        Some(0)
    );
    let out = sjb(&["verify", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("rank-independence"));
    assert!(text.contains("pairwise-orthogonal"));
    assert!(text.contains("uniform-per-start-rank"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn selected_checks_only() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    sjb(&["build", "--n", "5", "--out", path_str(&file)]);
    let out = sjb(&["verify", path_str(&file), "--checks", "sjc,ortho"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chains"));
    assert!(text.contains("pairwise-orthogonal"));
    assert!(!text.contains("rank-independence"));
    assert!(!text.contains("uniform-per-start-rank"));
}

#[test]
fn tampered_document_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    sjb(&["build", "--n", "3", "--out", path_str(&file)]);
    let text = std::fs::read_to_string(&file).unwrap();
    let tampered = text.replacen("\"coeff\":\"6\"", "\"coeff\":\"5\"", 1);
    assert_ne!(text, tampered);
    let bad = dir.path().join("tampered.json");
    std::fs::write(&bad, tampered).unwrap();
    let out = sjb(&["verify", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("FAIL"));
    assert!(report.contains("chain 0, vector 2"), "{report}");
}

#[test]
fn malformed_or_missing_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    sjb(&["build", "--n", "2", "--out", path_str(&file)]);
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(
        &file,
        text.replacen("\"coeff\":\"2\"", "\"coeff\":\"0\"", 1),
    )
    .unwrap();
    let out = sjb(&["verify", path_str(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero coefficient"));

    assert_eq!(
        sjb(&["verify", "/nonexistent/basis.json"]).status.code(),
        Some(2)
    );
    assert_eq!(sjb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sjb(&["build", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        sjb(&["rank", "--n", "2", "--k", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn rank_table() {
    let out = sjb(&["rank", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines[1], "2\t0\t1\t2\t1\ttrue\tfalse");
    assert_eq!(lines[2], "2\t1\t2\t1\t1\tfalse\ttrue");
    let out = sjb(&["rank", "--n", "4", "--k", "2"]);
    assert!(stdout(&out).contains("4\t2\t6\t4\t4\tfalse\ttrue"));
}

#[test]
fn profile_lists_one_line_per_start_rank() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    sjb(&["build", "--n", "2", "--out", path_str(&file)]);
    let out = sjb(&["profile", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("k=0: [2, 2] (1 chains)"), "{text}");
    assert!(text.contains("k=1: [] (1 chains)"), "{text}");
}

#[test]
fn compare_and_stats() {
    let out = sjb(&["compare", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0\t5\t1\t1"));
    assert!(text.contains("1\t3\t3\t3"));
    assert!(text.contains("2\t1\t2\t2"));
    assert!(text.contains("chain-by-chain: equal"));

    let out = sjb(&["stats", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dim V(B(n)) = 16"));
    assert!(text.contains("chains = 6"));
    assert!(text.contains("2\t6\t2"));
}

#[test]
fn scd_documents_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    assert_eq!(
        sjb(&[
            "build",
            "--n",
            "6",
            "--kind",
            "scd",
            "--out",
            path_str(&file)
        ])
        .status
        .code(),
        Some(0)
    );
    let out = sjb(&["verify", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("partition"));
}

#[test]
fn all_levels_writes_every_level() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    assert_eq!(
        sjb(&[
            "build",
            "--n",
            "3",
            "--all-levels",
            "--out",
            path_str(&file)
        ])
        .status
        .code(),
        Some(0)
    );
    for i in 0..=3 {
        assert!(dir.path().join(format!("b.n{i}.json")).exists());
    }
    assert_eq!(
        std::fs::read(dir.path().join("b.n3.json")).unwrap(),
        std::fs::read(&file).unwrap()
    );
}

#[test]
fn export_matrix_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("u.csv");
    assert_eq!(
        sjb(&[
            "export-matrix",
            "--n",
            "2",
            "--k",
            "0",
            "--out",
            path_str(&file)
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        std::fs::read_to_string(&file).unwrap(),
        "\"U[n=2,k=0]\",{}\n{1},1\n{2},1\n"
    );
}

#[test]
fn cap_can_be_lowered_or_raised() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    let out = Command::new(env!("CARGO_BIN_EXE_sjb"))
        .args(["build", "--n", "4", "--out", path_str(&file)])
        .env("SJB_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        sjb(&["--cap", "3", "stats", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sjb(&["--cap", "30", "stats", "--n", "2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        sjb(&["--cap", "64", "stats", "--n", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn cli_main_runs_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = sjb::cli::cli_main(["sjb", "rank", "--n", "3"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 4);
}
