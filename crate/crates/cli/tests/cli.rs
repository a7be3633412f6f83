use assert_cmd::Command;
use g2_core::fixtures;
use g2_core::isomap::DiagonalMap;
use g2_core::liealg::LieAlgebra;
use g2_core::rootsys::RootSystem;

fn g2(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("g2").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn prop28_passes_on_the_integer_table() {
    let (code, out, _) = g2(&["verify", "--cartan", "g2", "--approach", "hermitian", "--checks", "prop28"]);
    assert_eq!(code, 0);
    assert!(out.contains("summary: 60 pass / 0 fail"));
}

#[test]
fn prop29_fails_on_the_integer_table_with_witness() {
    let (code, _, err) = g2(&["verify", "--cartan", "g2", "--approach", "hermitian", "--checks", "prop29"]);
    assert_eq!(code, 1);
    assert!(err.contains("FAIL prop29 (α₁, α₂, −α₁−α₂): 1 vs 3"), "{err}");
}

#[test]
fn cyclic_table_passes_every_check_but_prop28() {
    let (code, out, _) = g2(&["verify", "--approach", "cyclic", "--checks", "antisym,jacobi,serre,prop29,prop211,killing,fixture"]);
    assert_eq!(code, 0);
    assert!(out.contains("summary: 364 pass / 0 fail"));
    let (code, _, err) = g2(&["verify", "--approach", "cyclic", "--checks", "prop28"]);
    assert_eq!(code, 1);
    assert!(err.contains("(α₁, α₂): 1 vs 1/2"), "{err}");
}

#[test]
fn solved_map_matches_the_published_one() {
    let (code, out, _) = g2(&["iso", "--from", "cyclic", "--to", "hermitian", "--solve", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(DiagonalMap::from_json(&out).unwrap(), fixtures::named_map("paper-5.1").unwrap());
    let (code, out, _) = g2(&["iso", "--from", "cyclic", "--to", "hermitian", "--map", "paper-5.1"]);
    assert_eq!(code, 0);
    assert!(out.contains("summary: 91 pass / 0 fail"));
}

#[test]
fn unit_pin_differs_from_the_published_map() {
    let (code, _, err) = g2(&["iso", "--from", "cyclic", "--to", "hermitian", "--solve", "--pin", "unit", "--map", "paper-5.1"]);
    assert_eq!(code, 1);
    assert!(err.contains("FAIL map E[1,0]"));
}

#[test]
fn markdown_cells() {
    let (code, out, _) = g2(&["table", "--approach", "hermitian"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.starts_with("| H_{α₂} |")).unwrap();
    let cells: Vec<&str> = row.split('|').map(str::trim).collect();
    // cells[1] is the row label; H₁, H₂, X₁ follow
    assert_eq!(&cells[2..5], ["", "0", "−3X_{α₁}"]);
    let (_, out, _) = g2(&["table", "--approach", "cyclic"]);
    let row = out.lines().find(|l| l.starts_with("| X′_{α₁+3α₂} |")).unwrap();
    assert!(row.trim_end().ends_with("| H′_{α₁+3α₂} | Y′_{α₁} |"), "{row}");
}

#[test]
fn json_table_round_trips() {
    for approach in ["hermitian", "cyclic"] {
        let (code, out, _) = g2(&["table", "--approach", approach, "--format", "json"]);
        assert_eq!(code, 0);
        let alg = LieAlgebra::from_json(RootSystem::g2(), &out).unwrap();
        let golden = if approach == "hermitian" { fixtures::table1() } else { fixtures::table2() }.unwrap();
        assert_eq!(alg, golden);
    }
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let (code, _, _) = g2(&["table", "--approach", "cyclic", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, again, _) = g2(&["table", "--approach", "cyclic", "--format", "csv"]);
    assert_eq!(written, again);
    assert_eq!(written.lines().count(), 92);
}

#[test]
fn roots_for_presets() {
    for (preset, n) in [("g2", 6), ("a2", 3), ("b2", 4), ("a1a1", 2)] {
        let (code, out, _) = g2(&["roots", "--cartan", preset, "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), n + 1, "{preset}");
    }
    let (_, out, _) = g2(&["roots", "--cartan", "[[2,-1],[-3,2]]", "--chains", "--format", "json"]);
    assert_eq!(serde_json::from_str::<Vec<serde_json::Value>>(&out).unwrap().len(), 15);
}

#[test]
fn intermediate_data() {
    let (code, out, _) = g2(&["table", "--approach", "cyclic", "--emit", "constants", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Vec<serde_json::Value>>(&out).unwrap().len(), 60);
    let (code, out, _) = g2(&["table", "--approach", "hermitian", "--emit", "rescaling"]);
    assert_eq!(code, 0);
    assert!(out.contains("| E[1,1] | −√6/2 |"), "{out}");
    let (code, _, _) = g2(&["table", "--approach", "hermitian", "--unscaled"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["table"],
        &["verify", "--approach", "cyclic", "--checks", "nonsense"],
        &["table", "--approach", "cyclic", "--cartan", "b2"],
        &["roots", "--cartan", "[[2,-2],[-3,2]]"],
        &["roots", "--cartan", "not-a-matrix"],
        &["table", "--approach", "cyclic", "--emit", "rescaling"],
        &["iso", "--from", "cyclic", "--to", "hermitian"],
        &["iso", "--from", "cyclic", "--to", "hermitian", "--map", "missing.json"],
    ] {
        let (code, _, _) = g2(args);
        assert_eq!(code, 2, "{args:?}");
    }
}
