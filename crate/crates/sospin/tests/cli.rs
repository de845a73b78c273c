//! End-to-end checks of the `sospin` binary: exit codes, output routing,
//! caps, and format coherence.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sospin"))
}

#[test]
fn multipole_table_text_defaults() {
    let out = bin()
        .args(["multipole-table", "--k-max", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in ["T0[] = 1", "T1[x] = Jx", "T1[y] = Jy", "T1[z] = Jz"] {
        assert!(text.contains(needle), "missing {needle:?} in {text}");
    }
}

#[test]
fn spin_table_zero_is_trivial() {
    let out = bin()
        .args(["spin-table", "--two-s", "0", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T0[] * T0[] = T0[]"));
    assert_eq!(text.lines().filter(|l| l.contains(" * ")).count(), 1);
}

#[test]
fn spin_table_json_round_trips() {
    let out = bin()
        .args(["spin-table", "--two-s", "1", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let (two_s, basis, constants) = sospin::render::parse_spin_table_json(&text).unwrap();
    assert_eq!(two_s, 1);
    assert_eq!(basis.len(), 4);
    // 4 identity rows on each side (minus the shared 1*1) plus 9 generator
    // products, all nonzero in S_{1/2}.
    assert_eq!(constants.len(), 16);
}

#[test]
fn caps_give_usage_exit_code() {
    for args in [
        vec!["multipole-table", "--k-max", "7"],
        vec!["spin-table", "--two-s", "5"],
        vec!["verify", "--two-s", "9"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn cap_env_var_overrides() {
    let out = bin()
        .env("SOSPIN_CAP", "7")
        .args(["multipole-table", "--k-max", "7", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = bin().args(["multipole-table", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_commutator() {
    let out = bin().args(["decompose", "Jx*Jy - Jy*Jx"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 * T1[z]"));
    assert!(text.contains("reconstruction: exact"));
}

#[test]
fn decompose_casimir_expression() {
    let out = bin()
        .args(["decompose", "Jx*Jx + Jy*Jy + Jz*Jz"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 * C T0[]"), "got {text}");
}

#[test]
fn decompose_parse_error_reports_position() {
    let out = bin().args(["decompose", "Jx + + Jy"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at byte 5"), "got {err}");
}

#[test]
fn decompose_degree_over_cap() {
    let expr = "Jx*Jx*Jx*Jx*Jx*Jx*Jx"; // degree 7 > default cap 6
    let out = bin().args(["decompose", expr]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("sospin-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let out = bin()
        .args(["multipole-table", "--k-max", "2", "--format", "json"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let parsed = sospin::render::parse_multipole_table_json(&written).unwrap();
    assert_eq!(parsed.len(), 1 + 3 + 5);
    std::fs::remove_file(&path).ok();
}

#[test]
fn quick_verify_exits_zero() {
    let out = bin()
        .args(["verify", "--two-s", "0", "--k-max", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all passed"));
    assert!(text.contains("projector-congruences"));
}

#[test]
fn formats_render_identical_row_sets() {
    // The JSON is the reference; text rows and CSV term counts must agree.
    let json_out = bin()
        .args(["multipole-table", "--k-max", "3", "--format", "json"])
        .output()
        .unwrap();
    let parsed =
        sospin::render::parse_multipole_table_json(&String::from_utf8(json_out.stdout).unwrap())
            .unwrap();
    let text_out = bin()
        .args(["multipole-table", "--k-max", "3", "--format", "text"])
        .output()
        .unwrap();
    let text = String::from_utf8(text_out.stdout).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_start().starts_with('T'))
            .count(),
        parsed.len()
    );
    let latex_out = bin()
        .args(["multipole-table", "--k-max", "3", "--format", "latex"])
        .output()
        .unwrap();
    let latex = String::from_utf8(latex_out.stdout).unwrap();
    assert_eq!(
        latex.lines().filter(|l| l.starts_with('$')).count(),
        parsed.len() + 1 // header row
    );
    let csv_out = bin()
        .args(["multipole-table", "--k-max", "3", "--format", "csv"])
        .output()
        .unwrap();
    let csv = String::from_utf8(csv_out.stdout).unwrap();
    let term_total: usize = parsed.iter().map(|(_, _, e)| e.num_terms()).sum();
    assert_eq!(csv.lines().count() - 1, term_total);
}
