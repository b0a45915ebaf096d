use skewlab::io::{self, IoError, ValidationError};
use skewlab_core::enumeration::{build_catalog, canonical_form};
use skewlab_core::group::named::{cyclic, symmetric};
use skewlab_core::solution::{random_solution, Table};
use skewlab_core::{FiniteSkewBrace, FiniteSolution, SolutionError};

#[test]
fn trivial_z2_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    let b = FiniteSkewBrace::trivial(&cyclic(2));
    io::save_brace(&b, &path).unwrap();
    let loaded = io::load_brace(&path).unwrap();
    assert_eq!(loaded.brace, b);
    assert_eq!(loaded.brace.additive().rows(), vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(loaded.brace.multiplicative().rows(), vec![vec![0, 1], vec![1, 0]]);
}

#[test]
fn mismatched_table_sizes_fail_to_parse() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\n  \"order\": 3,\n  \"add\": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],\n  \"mul\": [[0, 1], [1, 0]]\n}\n",
    )
    .unwrap();
    match io::load_brace(&path) {
        Err(IoError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(io::load_brace(dir.path().join("absent.json")), Err(IoError::Io { .. })));
}

#[test]
fn names_survive_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let b = FiniteSkewBrace::almost_trivial(&symmetric(3));
    let names: Vec<String> = ["e", "s", "t", "u", "v", "w"].iter().map(|s| s.to_string()).collect();
    io::save_named_brace(&b, &names, &path).unwrap();
    let loaded = io::load_brace(&path).unwrap();
    assert_eq!(loaded.names.as_deref(), Some(names.as_slice()));
    assert_eq!(loaded.name(3), "u");
}

#[test]
fn flip_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flip.json");
    let x = FiniteSolution::flip(3);
    io::save_solution(&x, &path).unwrap();
    assert_eq!(io::load_solution(&path).unwrap(), x);
}

#[test]
fn random_solutions_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..20 {
        let path = dir.path().join(format!("r{seed}.json"));
        let x = random_solution(6, seed);
        io::save_solution(&x, &path).unwrap();
        assert_eq!(io::load_solution(&path).unwrap(), x);
        assert_eq!(random_solution(6, seed), x);
    }
}

#[test]
fn degenerate_row_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("degenerate.json");
    std::fs::write(&path, r#"{"size": 3, "lambda": [[0,1,2],[0,1,2],[0,1,2]], "rho": [[0,1,2],[1,1,2],[0,1,2]]}"#)
        .unwrap();
    match io::load_solution(&path) {
        Err(IoError::Validation(ValidationError::Solution(SolutionError::Degenerate { table, row }))) => {
            assert_eq!((table, row), (Table::Rho, 1));
        }
        other => panic!("expected a degenerate row, got {other:?}"),
    }
}

#[test]
fn catalog_files_round_trip_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    for (i, entry) in build_catalog(6).unwrap().iter().enumerate() {
        let path = dir.path().join(format!("{i}.json"));
        let b = entry.brace();
        io::save_brace(&b, &path).unwrap();
        let first = std::fs::read(&path).unwrap();
        let loaded = io::load_brace(&path).unwrap();
        let (key, canon) = canonical_form(&loaded.brace);
        assert_eq!(key, entry.canonical_key);
        io::save_brace(&canon, &path).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), first);
    }
}
