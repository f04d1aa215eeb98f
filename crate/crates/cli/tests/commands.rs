use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use contactgeom_cli::ManifoldDocument;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contactgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn example_path() -> String {
    fixture("example_sasakian_r3.json").display().to_string()
}

fn flat_path() -> String {
    fixture("flat_r3.json").display().to_string()
}

#[test]
fn verify_example_lists_every_identity_as_passing() {
    let o = run(&["verify", &example_path()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for name in [
        "η(ξ) = 1",
        "g(X, φY) = dη(X, Y)",
        "tr h = 0",
        "tr(hφ) = 0",
        "hφ + φh = 0",
        "hξ = 0",
        "ℓξ = 0",
        "∇_ξφ = 0",
        "∇_Xξ = -εφX - φhX",
        "Ric(ξ, ξ) = 2n - tr h²",
        "Qξ = 2nεξ",
        "(∇_XQ)ξ = -2nφX + εQφX",
        "(∇_ξQ)X = ε(Qφ - φQ)X",
        "Qφ = φQ",
        "R(X, Y)ξ = η(Y)X - η(X)Y",
    ] {
        assert!(
            out.contains(&format!("PASS  {name}\n")),
            "missing {name}:\n{out}"
        );
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn soliton_on_the_line_and_off_it() {
    let o = run(&["soliton", &example_path(), "--lambda", "6", "--mu", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("η-Ricci soliton: YES, non-Killing, 𝔏_Vφ=0"));

    let o = run(&["soliton", &example_path(), "--lambda", "1", "--mu", "0"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("η-Ricci soliton: NO"));
    assert!(out.contains("[1, 1] = -5/2"), "{out}");
}

#[test]
fn timelike_example_round_trips_through_the_generator() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("timelike.json");
    let o = run(&[
        "example",
        "--epsilon",
        "-1",
        "--lambda",
        "-2",
        "--mu",
        "-4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let doc = ManifoldDocument::read(&path).unwrap();
    assert_eq!(
        doc.soliton.as_ref().unwrap().vector.as_deref(),
        Some(&["0".to_string(), "0".into(), "0".into()][..])
    );
    let o = run(&["soliton", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("YES, Killing"));
    assert_eq!(code(&run(&["theorems", path.to_str().unwrap()])), 0);
}

#[test]
fn bundled_example_matches_generator() {
    let o = run(&["example"]);
    assert_eq!(code(&o), 0);
    let generated = ManifoldDocument::from_json(&stdout(&o)).unwrap();
    let bundled = ManifoldDocument::read(&fixture("example_sasakian_r3.json")).unwrap();
    assert_eq!(generated, bundled);
}

#[test]
fn classify_reports_sasakian_and_rejects_flat() {
    let o = run(&["classify", &example_path(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["facts"]["Sasakian"], "yes");
    assert_eq!(v["facts"]["η-Einstein"], "a = -2, b = 4");
    assert_eq!(v["facts"]["D-homothetically fixed"], "yes");

    let o = run(&["classify", &flat_path()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL  φ² = -I + η⊗ξ"));
}

#[test]
fn exit_codes_for_bundled_fixtures() {
    let ex = example_path();
    let flat = flat_path();
    let cases: [(&[&str], i32); 10] = [
        (&["verify", &ex], 0),
        (&["classify", &ex], 0),
        (&["curvature", &ex], 0),
        (&["soliton", &ex], 0),
        (&["theorems", &ex], 0),
        (&["verify", &flat], 1),
        (&["classify", &flat], 1),
        (&["curvature", &flat], 0),
        (&["soliton", &flat], 0),
        (&["theorems", &flat], 0),
    ];
    for (args, want) in cases {
        assert_eq!(code(&run(args)), want, "{args:?}");
    }
}

#[test]
fn json_reports_are_deterministic_and_sorted() {
    let ex = example_path();
    for cmd in ["verify", "classify", "curvature", "soliton", "theorems"] {
        let a = run(&[cmd, &ex, "--format", "json"]);
        let b = run(&[cmd, &ex, "--format", "json"]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        for key in ["checks", "theorems"] {
            if let Some(items) = v[key].as_array() {
                let names: Vec<&str> = items.iter().map(|c| c["name"].as_str().unwrap()).collect();
                let mut sorted = names.clone();
                sorted.sort();
                assert_eq!(names, sorted, "{cmd} {key}");
            }
        }
    }
}

#[test]
fn theorems_json_mirrors_reports() {
    let o = run(&["theorems", &example_path(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let theorems = v["theorems"].as_array().unwrap();
    assert_eq!(theorems.len(), 6);
    let outcome = |name: &str| {
        theorems
            .iter()
            .find(|t| t["name"] == name)
            .map(|t| t["outcome"].as_str().unwrap().to_string())
            .unwrap()
    };
    assert_eq!(
        outcome("Sasakian η-Ricci soliton is η-Einstein"),
        "verified"
    );
    assert_eq!(outcome("Sasakian η-Ricci soliton dichotomy"), "verified");
    assert_eq!(
        outcome("η-Ricci soliton with V colinear with ξ"),
        "hypothesis_not_met"
    );
}

#[test]
fn gradient_soliton_with_constant_potential() {
    let ex = example_path();
    let o = run(&[
        "gradient-soliton",
        &ex,
        "--potential",
        "3",
        "--lambda",
        "2",
        "--mu",
        "-4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("gradient η-Ricci soliton: YES, Killing"));
    let o = run(&[
        "gradient-soliton",
        &ex,
        "--potential",
        "x*y",
        "--lambda",
        "2",
        "--mu",
        "-4",
    ]);
    assert_eq!(code(&o), 1);
    let o = run(&[
        "gradient-soliton",
        &ex,
        "--potential",
        "sin(x)",
        "--lambda",
        "2",
        "--mu",
        "-4",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn deformation_writes_a_loadable_fixed_structure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("deformed.json");
    let o = run(&[
        "deform",
        &example_path(),
        "--t",
        "1/2",
        "--out",
        out.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["facts"]["η-Einstein"], "a = -2, b = 4");
    assert_eq!(v["facts"]["D-homothetically fixed"], "yes");
    let doc = ManifoldDocument::read(&out).unwrap();
    assert_eq!(doc.xi, ["0", "0", "4"]);
    assert!(doc.soliton.is_none());
    assert_eq!(code(&run(&["verify", out.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["soliton", out.to_str().unwrap()])), 2);

    let o = run(&[
        "deform",
        &example_path(),
        "--t",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["verify", missing.to_str().unwrap()])), 2);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify", bad.to_str().unwrap()])), 2);

    let text = std::fs::read_to_string(fixture("example_sasakian_r3.json")).unwrap();
    let asym = dir.path().join("asym.json");
    std::fs::write(&asym, text.replacen("\"-1/4*y\"", "\"y\"", 1)).unwrap();
    let o = run(&["verify", asym.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("metric[2][0]"));

    let func = dir.path().join("func.json");
    std::fs::write(&func, text.replacen("\"1/4\"", "\"sin(x)\"", 1)).unwrap();
    let o = run(&["verify", func.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("metric[1][1]"));

    assert_eq!(
        code(&run(&["soliton", &example_path(), "--lambda", "1.5"])),
        2
    );
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify"])), 2);
    assert_eq!(code(&run(&["example", "--epsilon", "2"])), 2);
}
