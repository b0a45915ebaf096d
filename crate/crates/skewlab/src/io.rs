//! JSON files for braces and solutions.
//!
//! A brace file is `{"order": n, "add": [[..]], "mul": [[..]], "names": [..]}`
//! with `names` optional; a solution file is `{"size": n, "lambda": [[..]],
//! "rho": [[..]]}` with `lambda[x][y] = λ_x(y)` and `rho[x][y] = ρ_x(y)`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use skewlab_core::{BraceError, FiniteSkewBrace, FiniteSolution, SolutionError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("validation failed: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Error)]
pub enum ValidationError {
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraceFile {
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolutionFile {
    size: usize,
    lambda: Vec<Vec<usize>>,
    rho: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedBrace {
    pub brace: FiniteSkewBrace,
    /// Element names, in the order of the loaded brace.
    pub names: Option<Vec<String>>,
    /// `relabel[i]` is the index in `brace` of element `i` of the file.
    /// The identity of the file always lands on 0.
    pub relabel: Vec<usize>,
}

impl LoadedBrace {
    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn json_error(e: serde_json::Error) -> IoError {
    IoError::Parse {
        line: e.line(),
        reason: e.to_string(),
    }
}

/// 1-based line of the first occurrence of `"key"`, or 1.
fn line_of_key(text: &str, key: &str) -> usize {
    let quoted = format!("\"{key}\"");
    text.lines().position(|l| l.contains(&quoted)).map_or(1, |i| i + 1)
}

fn check_table(text: &str, key: &str, table: &[Vec<usize>], n: usize) -> Result<(), IoError> {
    let err = |reason: String| IoError::Parse {
        line: line_of_key(text, key),
        reason,
    };
    if table.len() != n {
        return Err(err(format!("`{key}` has {} rows, expected {n}", table.len())));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(err(format!("`{key}` row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some(v) = row.iter().find(|&&v| v >= n) {
            return Err(err(format!("`{key}` row {i} has entry {v} outside 0..{n}")));
        }
    }
    Ok(())
}

/// An element `e` with `e + x = x + e = x` for all `x`.
fn table_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
}

/// The transposition of 0 and `e`.
fn swap_to_zero(n: usize, e: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(0, e);
    perm
}

pub fn parse_brace(text: &str) -> Result<LoadedBrace, IoError> {
    let file: BraceFile = serde_json::from_str(text).map_err(json_error)?;
    let n = file.order;
    if n == 0 {
        return Err(IoError::Parse {
            line: line_of_key(text, "order"),
            reason: "order must be positive".into(),
        });
    }
    check_table(text, "add", &file.add, n)?;
    check_table(text, "mul", &file.mul, n)?;
    if let Some(names) = &file.names {
        if names.len() != n {
            return Err(IoError::Parse {
                line: line_of_key(text, "names"),
                reason: format!("{} names for {n} elements", names.len()),
            });
        }
    }
    let brace = FiniteSkewBrace::from_tables(&file.add, &file.mul).map_err(ValidationError::from)?;
    let relabel = swap_to_zero(n, table_identity(&file.add).unwrap_or(0));
    let names = file.names.map(|names| {
        let mut out = names.clone();
        for (i, name) in names.into_iter().enumerate() {
            out[relabel[i]] = name;
        }
        out
    });
    let brace = if relabel[0] == 0 { brace } else { brace.relabel(&relabel) };
    Ok(LoadedBrace { brace, names, relabel })
}

pub fn load_brace(path: impl AsRef<Path>) -> Result<LoadedBrace, IoError> {
    parse_brace(&read(path.as_ref())?)
}

/// Rows on one line each, so files stay diffable.
fn write_table(out: &mut String, key: &str, rows: &[Vec<usize>], last: bool) {
    out.push_str(&format!("  \"{key}\": [\n"));
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let sep = if i + 1 == rows.len() { "" } else { "," };
        out.push_str(&format!("    [{}]{sep}\n", cells.join(", ")));
    }
    out.push_str(if last { "  ]\n" } else { "  ],\n" });
}

pub fn brace_to_json(b: &FiniteSkewBrace, names: Option<&[String]>) -> String {
    let mut out = format!("{{\n  \"order\": {},\n", b.order());
    write_table(&mut out, "add", &b.additive().rows(), false);
    write_table(&mut out, "mul", &b.multiplicative().rows(), names.is_none());
    if let Some(names) = names {
        out.push_str(&format!(
            "  \"names\": {}\n",
            serde_json::to_string(names).expect("strings serialize")
        ));
    }
    out.push_str("}\n");
    out
}

pub fn save_brace(b: &FiniteSkewBrace, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &brace_to_json(b, None))
}

pub fn save_named_brace(b: &FiniteSkewBrace, names: &[String], path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &brace_to_json(b, Some(names)))
}

pub fn parse_solution(text: &str) -> Result<FiniteSolution, IoError> {
    let file: SolutionFile = serde_json::from_str(text).map_err(json_error)?;
    let n = file.size;
    if n == 0 {
        return Err(IoError::Parse {
            line: line_of_key(text, "size"),
            reason: "size must be positive".into(),
        });
    }
    check_table(text, "lambda", &file.lambda, n)?;
    check_table(text, "rho", &file.rho, n)?;
    Ok(FiniteSolution::from_tables(&file.lambda, &file.rho).map_err(ValidationError::from)?)
}

pub fn load_solution(path: impl AsRef<Path>) -> Result<FiniteSolution, IoError> {
    parse_solution(&read(path.as_ref())?)
}

pub fn solution_to_json(x: &FiniteSolution) -> String {
    let mut out = format!("{{\n  \"size\": {},\n", x.size());
    write_table(&mut out, "lambda", &x.lambda_rows(), false);
    write_table(&mut out, "rho", &x.rho_rows(), true);
    out.push_str("}\n");
    out
}

pub fn save_solution(x: &FiniteSolution, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &solution_to_json(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewlab_core::group::named::{cyclic, symmetric};
    use skewlab_core::solution::Table;

    #[test]
    fn brace_text_round_trip() {
        let b = FiniteSkewBrace::almost_trivial(&symmetric(3));
        let text = brace_to_json(&b, None);
        let loaded = parse_brace(&text).unwrap();
        assert_eq!(loaded.brace, b);
        assert_eq!(loaded.relabel, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(brace_to_json(&loaded.brace, None), text);
    }

    #[test]
    fn identity_moves_to_zero() {
        // ℤ/3 written with identity 2.
        let add = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let text = serde_json::json!({"order": 3, "add": add, "mul": add, "names": ["a", "b", "e"]}).to_string();
        let loaded = parse_brace(&text).unwrap();
        assert_eq!(loaded.brace.zero(), 0);
        assert_eq!(loaded.relabel, vec![2, 1, 0]);
        assert_eq!(loaded.names.as_deref().unwrap(), ["e", "b", "a"]);
        assert_eq!(loaded.brace, FiniteSkewBrace::trivial(&cyclic(3)).relabel(&[0, 2, 1]));
    }

    #[test]
    fn size_mismatch_is_a_parse_error() {
        let text = "{\n\"order\": 3,\n\"add\": [[0,1,2],[1,2,0],[2,0,1]],\n\"mul\": [[0,1],[1,0]]\n}";
        match parse_brace(text) {
            Err(IoError::Parse { line, reason }) => {
                assert_eq!(line, 4);
                assert!(reason.contains("mul"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_line() {
        let text = "{\n\"order\": 2,\n\"add\": [[0,1],[1,0]],,\n}";
        assert!(matches!(parse_brace(text), Err(IoError::Parse { line: 3, .. })));
    }

    #[test]
    fn invalid_brace_is_a_validation_error() {
        let add = cyclic(4).rows();
        let mul = cyclic(4).relabel(&[0, 2, 1, 3]).rows();
        let text = serde_json::json!({"order": 4, "add": add, "mul": mul}).to_string();
        assert!(matches!(
            parse_brace(&text),
            Err(IoError::Validation(ValidationError::Brace(_)))
        ));
    }

    #[test]
    fn degenerate_solution_names_row() {
        let text = serde_json::json!({"size": 2, "lambda": [[0, 1], [0, 0]], "rho": [[0, 1], [0, 1]]}).to_string();
        match parse_solution(&text) {
            Err(IoError::Validation(ValidationError::Solution(SolutionError::Degenerate { table, row }))) => {
                assert_eq!((table, row), (Table::Lambda, 1));
            }
            other => panic!("expected a degenerate row, got {other:?}"),
        }
    }

    #[test]
    fn solution_text_round_trip() {
        let x = FiniteSolution::flip(3);
        let text = solution_to_json(&x);
        assert_eq!(parse_solution(&text).unwrap(), x);
    }
}
