//! Command implementations behind the `lpcat` binary.
//!
//! Each command returns its stdout plus an exit code, so the test suites can
//! drive them without spawning processes. Exit codes: 0 analysis done,
//! 1 bad input (syntax, file, flags), 2 internal invariant violation
//! (engine/oracle disagreement), 3 analysis fine but the outcome fails an
//! expectation (`--fail-on-invalid`, corpus mismatches, compare reports).

pub mod compare;
pub mod corpus;
pub mod treeview;

use lpcat_core::engine::{check_validity, Verdict};
use lpcat_core::semantics::{
    eval, t_validity_limited, truth_table, Assignment, TruthValue, DEFAULT_ATOM_LIMIT,
};
use lpcat_core::tree::build_tree;
use lpcat_core::{format_trace, parse, Formula, RenderStyle};
use std::fmt;

#[derive(Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub exit_code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            exit_code: 0,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit_code: 1,
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit_code: 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub type CmdResult = Result<CmdOutput, CliError>;

pub(crate) fn parse_formula(text: &str) -> Result<Formula, CliError> {
    parse(text).map_err(|e| CliError::usage(format!("{e}")))
}

fn style(unicode: bool) -> RenderStyle {
    if unicode {
        RenderStyle::Unicode
    } else {
        RenderStyle::Ascii
    }
}

/// Parses `A=*,B=0` into an assignment.
pub fn parse_model(text: &str) -> Result<Assignment, CliError> {
    let mut a = Assignment::new();
    for part in text.split(',') {
        let part = part.trim();
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("malformed model entry '{part}', want name=value")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(CliError::usage(format!("malformed model entry '{part}'")));
        }
        let value = TruthValue::from_symbol(value.trim()).ok_or_else(|| {
            CliError::usage(format!(
                "bad truth value in '{part}', want 0, * or 1"
            ))
        })?;
        a.set(name, value);
    }
    Ok(a)
}

#[derive(Clone, Copy, Default)]
pub struct CheckOptions {
    pub trace: bool,
    pub oracle: bool,
    pub fail_on_invalid: bool,
    pub unicode: bool,
    pub max_atoms_override: bool,
    pub json: bool,
}

/// `lpcat check FORMULA` — decide A-validity, optionally cross-checking the
/// truth-table oracle and printing the justification trace.
pub fn cmd_check(formula_text: &str, opts: &CheckOptions) -> CmdResult {
    let f = parse_formula(formula_text)?;
    let verdict = check_validity(&f);

    let oracle = if opts.oracle {
        let limit = if opts.max_atoms_override {
            usize::MAX
        } else {
            DEFAULT_ATOM_LIMIT
        };
        let o = t_validity_limited(&f, limit)
            .map_err(|e| CliError::usage(format!("{e}, pass --max-atoms-override")))?;
        if o.is_valid() != verdict.is_valid() {
            return Err(CliError::internal(format!(
                "engine/oracle disagreement on '{}': engine says {}, oracle says {}",
                f.render(style(opts.unicode)),
                if verdict.is_valid() { "A-VALID" } else { "A-INVALID" },
                if o.is_valid() { "T-VALID" } else { "T-INVALID" },
            )));
        }
        if let Some(model) = verdict.assignment() {
            if eval(&f, model) != Ok(TruthValue::Zero) {
                return Err(CliError::internal(format!(
                    "refuting model {model} does not evaluate '{}' to 0",
                    f.render(style(opts.unicode))
                )));
            }
        }
        Some(o)
    } else {
        None
    };

    if opts.json {
        let tree = build_tree(&f);
        let marking = match &verdict {
            Verdict::AInvalid { marking, .. } => Some(marking),
            Verdict::AValid { .. } => None,
        };
        let mut doc = treeview::tree_json(&tree, marking);
        let obj = doc.as_object_mut().expect("tree_json yields an object");
        obj.insert(
            "verdict".into(),
            serde_json::Value::String(
                if verdict.is_valid() { "A-VALID" } else { "A-INVALID" }.into(),
            ),
        );
        if let Some(model) = verdict.assignment() {
            obj.insert("model".into(), treeview::model_json(model));
        }
        if opts.trace {
            let lines: Vec<serde_json::Value> = format_trace(verdict.trace())
                .lines()
                .map(|l| serde_json::Value::String(l.to_string()))
                .collect();
            obj.insert("trace".into(), serde_json::Value::Array(lines));
        }
        let exit_code = if opts.fail_on_invalid && !verdict.is_valid() {
            3
        } else {
            0
        };
        return Ok(CmdOutput {
            stdout: format!("{:#}\n", doc),
            exit_code,
        });
    }

    let mut out = String::new();
    match &verdict {
        Verdict::AValid { .. } => out.push_str("A-VALID\n"),
        Verdict::AInvalid { assignment, .. } => {
            out.push_str(&format!("A-INVALID  model: {assignment}\n"));
        }
    }
    if let Some(o) = oracle {
        match o.countermodel() {
            None => out.push_str("oracle: T-VALID (agrees)\n"),
            Some(model) => out.push_str(&format!(
                "oracle: T-INVALID (agrees)  first countermodel: {model}\n"
            )),
        }
    }
    if opts.trace {
        out.push_str(&format_trace(verdict.trace()));
        out.push('\n');
    }
    let exit_code = if opts.fail_on_invalid && !verdict.is_valid() {
        3
    } else {
        0
    };
    Ok(CmdOutput {
        stdout: out,
        exit_code,
    })
}

/// Guard for `cmd_table`: 3^n rows get unwieldy fast.
pub const TABLE_ATOM_LIMIT: usize = 6;

/// `lpcat table FORMULA` — print the trivalent truth table, designated rows
/// flagged with `+`.
pub fn cmd_table(formula_text: &str, unicode: bool, max_atoms_override: bool) -> CmdResult {
    let f = parse_formula(formula_text)?;
    let atoms = f.atoms();
    if atoms.len() > TABLE_ATOM_LIMIT && !max_atoms_override {
        return Err(CliError::usage(format!(
            "formula has {} atoms; table is capped at {TABLE_ATOM_LIMIT} (pass --max-atoms-override)",
            atoms.len()
        )));
    }
    let rows = truth_table(&f);
    let mut out = String::new();
    let widths: Vec<usize> = atoms.iter().map(|a| a.chars().count()).collect();
    for (a, w) in atoms.iter().zip(&widths) {
        out.push_str(&format!("{a:<w$} "));
    }
    out.push_str(&format!("| {}\n", f.render(style(unicode))));
    for (assignment, value) in &rows {
        for (name, w) in atoms.iter().zip(&widths) {
            let v = assignment.get(name).expect("row is total");
            out.push_str(&format!("{:<w$} ", v.to_string()));
        }
        out.push_str(&format!("| {value}"));
        if value.is_designated() {
            out.push_str(" +");
        }
        out.push('\n');
    }
    Ok(CmdOutput::ok(out))
}
