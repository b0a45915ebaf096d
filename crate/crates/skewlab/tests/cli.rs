use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use skewlab::io;
use skewlab_core::group::named::{cyclic, symmetric};
use skewlab_core::{FiniteSkewBrace, FiniteSolution};
use tempfile::TempDir;

fn skewlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewlab"))
        .args(args)
        .env_remove("SKEWLAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn brace_file(dir: &TempDir, name: &str, b: &FiniteSkewBrace) -> PathBuf {
    let path = dir.path().join(name);
    io::save_brace(b, &path).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// `(S₃, ·, ·op)` with elements in the order of `symmetric(3)`.
fn optriv_s3(dir: &TempDir) -> PathBuf {
    brace_file(dir, "s3.json", &FiniteSkewBrace::almost_trivial(&symmetric(3)))
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = optriv_s3(&dir);
    let out = skewlab(&["validate", "brace", s(&good)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("order 6"));

    let invalid = dir.path().join("invalid.json");
    let add = cyclic(4).rows();
    let mul = cyclic(4).relabel(&[0, 2, 1, 3]).rows();
    std::fs::write(&invalid, serde_json::json!({"order": 4, "add": add, "mul": mul}).to_string()).unwrap();
    assert_eq!(code(&skewlab(&["validate", "brace", s(&invalid)])), 1);

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "{\"order\": 2, \"add\": [[0,1],[1,0]]").unwrap();
    let out = skewlab(&["validate", "brace", s(&malformed)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 1"));

    assert_eq!(code(&skewlab(&["validate", "brace", s(&dir.path().join("absent.json"))])), 2);
}

#[test]
fn validate_solution_names_degenerate_row() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("x.json");
    std::fs::write(&path, r#"{"size": 2, "lambda": [[0,1],[1,1]], "rho": [[0,1],[0,1]]}"#).unwrap();
    let out = skewlab(&["validate", "solution", s(&path)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("lambda row 1"), "{}", stderr(&out));
}

#[test]
fn analyze_json_report() {
    let dir = TempDir::new().unwrap();
    let path = optriv_s3(&dir);
    let out = skewlab(&["analyze", s(&path), "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "skewlab.analysis/1");
    assert_eq!(v["soc"], 1);
    assert_eq!(v["b2"], 3);
    assert_eq!(v["two_sided"], true);
    assert_eq!(v["theta_orbit_sizes"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["index_equality_verified"], true);
    // Same report on a second run.
    assert_eq!(stdout(&skewlab(&["analyze", s(&path), "--json"])), stdout(&out));

    let text = stdout(&skewlab(&["analyze", s(&path)]));
    assert!(text.contains("|Soc|"));
}

#[test]
fn orbits_and_substructures() {
    let dir = TempDir::new().unwrap();
    let path = optriv_s3(&dir);
    let out = skewlab(&["orbits", s(&path), "--element", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("|Stab_θ|"));

    let out = skewlab(&["subbraces", s(&path), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "skewlab.subbraces/1");
    let subs = v["subbraces"].as_array().unwrap();
    assert_eq!(subs.len(), 6);
    assert!(subs.iter().all(|r| r["index_add"] == r["index_mul"]));

    let out = skewlab(&["index", s(&path), "--sub", "0"]);
    assert_eq!(stdout(&out), "index+ = 6\nindex∘ = 6\n");

    let out = skewlab(&["sli", s(&path), "--sub", "0,1,2,3,4,5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ideal: {0, 1, 2, 3, 4, 5}"));

    let out = skewlab(&["dietzmann", s(&path), "--elements", "0"]);
    assert!(stdout(&out).contains("equals strong left ideal closure: true"));
}

#[test]
fn non_subbrace_is_rejected() {
    let dir = TempDir::new().unwrap();
    let path = brace_file(&dir, "z4.json", &FiniteSkewBrace::trivial(&cyclic(4)));
    assert_eq!(code(&skewlab(&["index", s(&path), "--sub", "0,1"])), 1);
    assert_eq!(code(&skewlab(&["index", s(&path), "--sub", "0,9"])), 2);
}

#[test]
fn solution_commands() {
    let dir = TempDir::new().unwrap();
    let brace = brace_file(&dir, "s3.json", &FiniteSkewBrace::trivial(&symmetric(3)));
    let sol = dir.path().join("r.json");
    assert_eq!(code(&skewlab(&["to-solution", s(&brace), "--out", s(&sol)])), 0);
    assert_eq!(code(&skewlab(&["validate", "solution", s(&sol)])), 0);

    let derived = skewlab(&["solution", "derived", s(&sol)]);
    assert_eq!(code(&derived), 0);
    io::parse_solution(&stdout(&derived)).unwrap();

    let retract = skewlab(&["solution", "retract", s(&sol)]);
    assert_eq!(code(&retract), 0);
    assert!(stderr(&retract).contains("projection"));

    let tower = skewlab(&["solution", "tower", s(&sol), "--json"]);
    let sizes: Vec<usize> = serde_json::from_str(&stdout(&tower)).unwrap();
    assert_eq!(sizes[0], 6);

    let atoms = skewlab(&["solution", "atoms", s(&sol), "--json"]);
    assert_eq!(code(&atoms), 0);
    let v: Value = serde_json::from_str(&stdout(&atoms)).unwrap();
    assert_eq!(v["schema"], "skewlab.solution/1");

    let flip = dir.path().join("flip.json");
    io::save_solution(&FiniteSolution::flip(4), &flip).unwrap();
    let out = skewlab(&["solution", "atoms", s(&flip)]);
    assert_eq!(stdout(&out), "[0]\n[1]\n[2]\n[3]\n");
}

#[test]
fn large_orbits_hit_the_resource_cap() {
    let dir = TempDir::new().unwrap();
    let n = 20;
    let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let path = dir.path().join("shift.json");
    io::save_solution(&FiniteSolution::permutation(&shift, &shift).unwrap(), &path).unwrap();
    assert_eq!(code(&skewlab(&["solution", "decompose", s(&path)])), 3);
    let out = skewlab(&["solution", "atoms", s(&path)]);
    assert_eq!(code(&out), 3);
    assert!(!stdout(&out).is_empty());
}

#[test]
fn enumerate_writes_deterministic_catalog() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [&a, &b] {
        let out = skewlab(&["enumerate", "--max-order", "4", "--out", s(dir.path())]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).contains("total: 7"));
    }
    let mut names: Vec<String> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 8);
    for name in &names {
        let bytes = std::fs::read(a.path().join(name)).unwrap();
        assert_eq!(bytes, std::fs::read(b.path().join(name)).unwrap(), "{name}");
        if name != "catalog.json" {
            let loaded = io::load_brace(a.path().join(name)).unwrap();
            assert_eq!(io::brace_to_json(&loaded.brace, None).into_bytes(), bytes);
        }
    }
    let index: Value = serde_json::from_slice(&std::fs::read(a.path().join("catalog.json")).unwrap()).unwrap();
    assert_eq!(index["schema"], "skewlab.catalog/1");
    assert_eq!(index["entries"].as_array().unwrap().len(), 7);
}

#[test]
fn enumeration_cap_and_override() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&skewlab(&["enumerate", "--max-order", "9", "--out", s(dir.path())])), 3);
    let capped = Command::new(env!("CARGO_BIN_EXE_skewlab"))
        .args(["enumerate", "--max-order", "4", "--out", s(dir.path())])
        .env("SKEWLAB_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 3);
    let raised = Command::new(env!("CARGO_BIN_EXE_skewlab"))
        .args(["enumerate", "--max-order", "3", "--out", s(dir.path())])
        .env("SKEWLAB_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&raised), 0);
}

#[test]
fn family_commands() {
    let out = skewlab(&["family", "cdinf", "lambda", "3", "7"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("-7\n"));
    assert!(stdout(&out).contains("agrees with -g + g∘x: true"));

    let out = skewlab(&["family", "free2", "orbit", "ab"]);
    assert_eq!(stdout(&out), "finite (2): {ab, ba}\n");

    let out = skewlab(&["family", "optriv-dinf", "orbit", "b", "--theta", "--cap", "10"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("overflow"));

    let out = skewlab(&["family", "rosita", "member", "ann", "(0,0,0)"]);
    assert!(stdout(&out).starts_with("true\n"));

    let out = skewlab(&["family", "rosita", "check", "ann", "--radius", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "skewlab.window/1");
    assert_eq!(v["counterexamples"], 0);

    assert_eq!(code(&skewlab(&["family", "cdinf", "check", "soc", "--radius", "0"])), 2);
    assert_eq!(code(&skewlab(&["family", "nope", "orbit", "1"])), 2);
    assert_eq!(code(&skewlab(&["family", "rosita", "orbit", "(1,2)"])), 2);
}

#[test]
fn sweep_reports_one_line_per_suite() {
    let out = skewlab(&["sweep", "closed-forms"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("criterion 12 closed-forms"));
    assert!(text.contains("PASS"));

    let out = skewlab(&["sweep", "3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "skewlab.sweep/1");
    assert_eq!(v["passed"], true);

    assert_eq!(code(&skewlab(&["sweep", "nope"])), 2);
}
