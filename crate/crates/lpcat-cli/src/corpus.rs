//! Corpus runner: a line-oriented regression format for validity
//! expectations.
//!
//! One entry per line: a formula, optionally followed by `@valid` or
//! `@invalid`, and `@model name=value,...` to pin the refuting assignment.
//! Lines whose first column is `#` are comments; elsewhere `#` is the
//! incompatibility operator, so formulas starting with it need a leading
//! space. Blank lines are skipped.

use crate::{parse_formula, parse_model, CliError, CmdOutput, CmdResult};
use lpcat_core::engine::check_validity;
use lpcat_core::semantics::Assignment;
use rayon::prelude::*;
use std::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub enum Expectation {
    Valid,
    /// Invalid, optionally with the exact refuting assignment.
    Invalid(Option<Assignment>),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub formula: String,
    pub expect: Option<Expectation>,
}

fn parse_entry(line_no: usize, line: &str) -> Result<Option<CorpusEntry>, CliError> {
    if line.starts_with('#') {
        return Ok(None);
    }
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Ok(None);
    }
    let (formula_part, annotation_part) = match trimmed.find(" @") {
        Some(idx) => (&trimmed[..idx], trimmed[idx..].trim()),
        None => (trimmed, ""),
    };
    let formula = formula_part.trim().to_string();
    if formula.is_empty() {
        return Err(CliError::usage(format!(
            "line {line_no}: annotation without a formula"
        )));
    }

    let mut valid = false;
    let mut invalid = false;
    let mut model: Option<Assignment> = None;
    let mut tokens = annotation_part.split_whitespace();
    while let Some(tok) = tokens.next() {
        match tok {
            "@valid" => valid = true,
            "@invalid" => invalid = true,
            "@model" => {
                let arg = tokens.next().ok_or_else(|| {
                    CliError::usage(format!("line {line_no}: @model needs name=value,..."))
                })?;
                model = Some(parse_model(arg).map_err(|e| {
                    CliError::usage(format!("line {line_no}: {e}"))
                })?);
            }
            other => {
                return Err(CliError::usage(format!(
                    "line {line_no}: unknown annotation '{other}'"
                )))
            }
        }
    }
    if valid && (invalid || model.is_some()) {
        return Err(CliError::usage(format!(
            "line {line_no}: @valid conflicts with @invalid/@model"
        )));
    }
    let expect = if valid {
        Some(Expectation::Valid)
    } else if invalid || model.is_some() {
        Some(Expectation::Invalid(model))
    } else {
        None
    };
    Ok(Some(CorpusEntry {
        line: line_no,
        formula,
        expect,
    }))
}

/// Parses a whole corpus file; comments and blank lines are dropped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CliError> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(e) = parse_entry(i + 1, line)? {
            entries.push(e);
        }
    }
    Ok(entries)
}

struct EntryReport {
    line: usize,
    formula: String,
    pass: bool,
    detail: String,
}

fn run_entry(entry: &CorpusEntry) -> Result<EntryReport, CliError> {
    let f = parse_formula(&entry.formula)
        .map_err(|e| CliError::usage(format!("line {}: {}", entry.line, e.message)))?;
    let verdict = check_validity(&f);
    let got = if verdict.is_valid() {
        "A-VALID".to_string()
    } else {
        format!("A-INVALID  model: {}", verdict.assignment().expect("invalid"))
    };
    let (pass, detail) = match &entry.expect {
        None => (true, got),
        Some(Expectation::Valid) => {
            if verdict.is_valid() {
                (true, got)
            } else {
                (false, format!("expected A-VALID, got {got}"))
            }
        }
        Some(Expectation::Invalid(model)) => {
            if verdict.is_valid() {
                (false, format!("expected A-INVALID, got {got}"))
            } else {
                match (model, verdict.assignment()) {
                    (Some(want), Some(found)) if want != found => (
                        false,
                        format!("expected model {want}, got model {found}"),
                    ),
                    _ => (true, got),
                }
            }
        }
    };
    Ok(EntryReport {
        line: entry.line,
        formula: entry.formula.clone(),
        pass,
        detail,
    })
}

/// `lpcat corpus PATH` — check every entry against its annotations, print a
/// pass/fail line each and the totals. Exit 0 only when everything passes.
pub fn cmd_corpus(path: &Path) -> CmdResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let entries = parse_corpus(&text)?;
    let reports = entries
        .par_iter()
        .map(run_entry)
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = String::new();
    let mut passed = 0usize;
    for r in &reports {
        if r.pass {
            passed += 1;
            out.push_str(&format!("PASS  {}\n", r.formula));
        } else {
            out.push_str(&format!(
                "FAIL  {} (line {}): {}\n",
                r.formula, r.line, r.detail
            ));
        }
    }
    out.push_str(&format!("{passed}/{} passed\n", reports.len()));
    let exit_code = if passed == reports.len() { 0 } else { 3 };
    Ok(CmdOutput {
        stdout: out,
        exit_code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn run_text(text: &str) -> CmdOutput {
        let mut file = tempfile_path();
        write!(file.1, "{text}").unwrap();
        cmd_corpus(&file.0).unwrap()
    }

    fn tempfile_path() -> (std::path::PathBuf, std::fs::File) {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "lpcat-corpus-{}-{:?}.txt",
            std::process::id(),
            std::thread::current().id()
        ));
        let file = std::fs::File::create(&path).unwrap();
        (path, file)
    }

    #[test]
    fn passes_annotated_entries() {
        let out = run_text(
            "# excluded middle\nA | -A @valid\n\n-A -> (A -> B) @invalid @model A=*,B=0\n",
        );
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("PASS  A | -A"));
        assert!(out.stdout.ends_with("2/2 passed\n"));
    }

    #[test]
    fn empty_corpus_passes() {
        let out = run_text("# nothing here\n\n");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.ends_with("0/0 passed\n"));
    }

    #[test]
    fn reports_expectation_mismatches() {
        let out = run_text("A | -A @invalid\n");
        assert_eq!(out.exit_code, 3);
        assert!(out.stdout.contains("FAIL  A | -A"));
        assert!(out.stdout.contains("expected A-INVALID, got A-VALID"));
        assert!(out.stdout.ends_with("0/1 passed\n"));
    }

    #[test]
    fn model_mismatch_fails() {
        let out = run_text("-A -> (A -> B) @model A=1,B=0\n");
        assert_eq!(out.exit_code, 3);
        assert!(out.stdout.contains("expected model A=1 B=0"));
    }

    #[test]
    fn malformed_entries_are_usage_errors() {
        let (path, mut file) = tempfile_path();
        writeln!(file, "A | -A @sometimes").unwrap();
        assert_eq!(cmd_corpus(&path).unwrap_err().exit_code, 1);
        let (path, mut file) = tempfile_path();
        writeln!(file, "A @valid @model A=1").unwrap();
        assert_eq!(cmd_corpus(&path).unwrap_err().exit_code, 1);
    }

    #[test]
    fn hash_comments_only_at_column_zero() {
        // an indented #A entry is a formula, not a comment
        let out = run_text(" #A -> (-A -> (A -> B)) @valid\n");
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.ends_with("1/1 passed\n"));
    }

    #[test]
    fn missing_file_is_a_usage_error() {
        let err = cmd_corpus(Path::new("/nonexistent/corpus.txt")).unwrap_err();
        assert_eq!(err.exit_code, 1);
    }
}
