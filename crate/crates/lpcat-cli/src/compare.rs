//! Cross-validation harness: runs the forcing engine and the truth-table
//! oracle over a formula space and reports every disagreement.
//!
//! Exhaustive mode enumerates all formulas over the given atoms with
//! connectives `- ~ # & | ->` up to a nesting depth, `#` on atoms only, in a
//! deterministic order. Random mode samples seeded formulas (biconditionals
//! included). Work fans out across threads; reports are ordered by the
//! enumeration index regardless of completion order.

use crate::{CliError, CmdOutput, CmdResult};
use lpcat_core::engine::check_validity;
use lpcat_core::gen;
use lpcat_core::semantics::{eval, t_validity, TruthValue};
use lpcat_core::Formula;
use rayon::prelude::*;

pub const ATOM_NAMES: &[&str] = &["p", "q", "r", "s", "t", "u", "v", "w"];
pub const EXHAUSTIVE_DEPTH_LIMIT: u32 = 4;

#[derive(Debug, Clone)]
pub struct Disagreement {
    pub formula: String,
    pub engine_valid: bool,
    pub oracle_valid: bool,
}

#[derive(Debug, Clone, Default)]
pub struct CompareReport {
    pub checked: u64,
    pub disagreements: Vec<Disagreement>,
    /// Refuting models that failed to evaluate their formula to 0.
    pub model_violations: Vec<String>,
}

impl CompareReport {
    pub fn clean(&self) -> bool {
        self.disagreements.is_empty() && self.model_violations.is_empty()
    }

    fn absorb(&mut self, other: CompareReport) {
        self.checked += other.checked;
        self.disagreements.extend(other.disagreements);
        self.model_violations.extend(other.model_violations);
    }
}

fn check_one(f: &Formula, report: &mut CompareReport) {
    let engine = check_validity(f);
    let oracle = t_validity(f).expect("compare spaces stay under the atom cap");
    report.checked += 1;
    if engine.is_valid() != oracle.is_valid() {
        report.disagreements.push(Disagreement {
            formula: f.to_string(),
            engine_valid: engine.is_valid(),
            oracle_valid: oracle.is_valid(),
        });
    }
    if let Some(model) = engine.assignment() {
        if eval(f, model) != Ok(TruthValue::Zero) {
            report
                .model_violations
                .push(format!("{f} under {model}"));
        }
    }
}

/// Engine vs oracle over every formula with the first `atom_count` atoms and
/// depth at most `max_depth`.
pub fn compare_exhaustive(atom_count: usize, max_depth: u32) -> CompareReport {
    let atoms = &ATOM_NAMES[..atom_count];
    let mut report = CompareReport::default();
    if max_depth == 0 {
        for name in atoms {
            check_one(&Formula::atom(*name), &mut report);
        }
        return report;
    }

    // root-case split of the space: leaves and unary roots are cheap, the
    // binary roots over the shallower space carry the bulk and fan out
    let prev = gen::formulas_up_to(atoms, max_depth - 1);
    for name in atoms {
        check_one(&Formula::atom(*name), &mut report);
        check_one(&Formula::incompat(*name), &mut report);
    }
    let unary = prev
        .par_iter()
        .map(|x| {
            let mut local = CompareReport::default();
            check_one(&Formula::weak_neg(x.clone()), &mut local);
            check_one(&Formula::strong_neg(x.clone()), &mut local);
            local
        })
        .reduce(CompareReport::default, |mut a, b| {
            a.absorb(b);
            a
        });
    report.absorb(unary);
    let binary = prev
        .par_iter()
        .map(|x| {
            let mut local = CompareReport::default();
            for y in &prev {
                check_one(&Formula::and(x.clone(), y.clone()), &mut local);
                check_one(&Formula::or(x.clone(), y.clone()), &mut local);
                check_one(&Formula::imp(x.clone(), y.clone()), &mut local);
            }
            local
        })
        .reduce(CompareReport::default, |mut a, b| {
            a.absorb(b);
            a
        });
    report.absorb(binary);
    report
}

/// Engine vs oracle over `samples` seeded random formulas.
pub fn compare_random(
    atom_count: usize,
    max_depth: u32,
    samples: u64,
    seed: u64,
) -> CompareReport {
    let atoms = &ATOM_NAMES[..atom_count];
    let mut rng = gen::seeded_rng(seed);
    let formulas: Vec<Formula> = (0..samples)
        .map(|_| gen::random_formula(&mut rng, atoms, max_depth))
        .collect();
    formulas
        .par_iter()
        .map(|f| {
            let mut local = CompareReport::default();
            check_one(f, &mut local);
            local
        })
        .reduce(CompareReport::default, |mut a, b| {
            a.absorb(b);
            a
        })
}

/// `lpcat compare` — exhaustive by default, sampled with `--random N`.
pub fn cmd_compare(
    max_depth: u32,
    atom_count: usize,
    random: Option<u64>,
    seed: u64,
) -> CmdResult {
    if atom_count == 0 || atom_count > ATOM_NAMES.len() {
        return Err(CliError::usage(format!(
            "--atom-count must be between 1 and {}",
            ATOM_NAMES.len()
        )));
    }
    let atoms = &ATOM_NAMES[..atom_count];
    let (header, report) = match random {
        None => {
            if max_depth > EXHAUSTIVE_DEPTH_LIMIT {
                return Err(CliError::usage(format!(
                    "exhaustive mode is capped at --max-depth {EXHAUSTIVE_DEPTH_LIMIT} \
                     ({} formulas already at depth 3 over two atoms); use --random N",
                    gen::formula_space_size(2, 3)
                )));
            }
            (
                format!(
                    "exhaustive: atoms {{{}}}, depth <= {max_depth}",
                    atoms.join(", ")
                ),
                compare_exhaustive(atom_count, max_depth),
            )
        }
        Some(samples) => (
            format!(
                "random: {samples} samples, atoms {{{}}}, depth <= {max_depth}, seed {seed}",
                atoms.join(", ")
            ),
            compare_random(atom_count, max_depth, samples, seed),
        ),
    };

    let mut out = format!("{header}\n");
    out.push_str(&format!("checked {} formulas\n", report.checked));
    for d in &report.disagreements {
        out.push_str(&format!(
            "DISAGREE  {}  engine: {}, oracle: {}\n",
            d.formula,
            if d.engine_valid { "A-VALID" } else { "A-INVALID" },
            if d.oracle_valid { "T-VALID" } else { "T-INVALID" },
        ));
    }
    for v in &report.model_violations {
        out.push_str(&format!("BAD MODEL  {v}\n"));
    }
    out.push_str(&format!(
        "disagreements: {}, model violations: {}\n",
        report.disagreements.len(),
        report.model_violations.len()
    ));
    let exit_code = if report.clean() { 0 } else { 2 };
    Ok(CmdOutput {
        stdout: out,
        exit_code,
    })
}
