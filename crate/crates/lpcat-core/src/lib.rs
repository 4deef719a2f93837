//! Validity in the paraconsistent propositional calculi P1 and LPcAt,
//! decided two independent ways:
//!
//! * [`semantics`] — trivalent truth tables with designated values `1` and
//!   `*`, decided by exhaustive enumeration;
//! * [`engine`] — semantic forcing trees: rule-driven mark propagation over
//!   the shared-cell syntax tree, with counterexamples read off the leaf
//!   marks.
//!
//! The two agree on every formula; the test suites check that exhaustively
//! over small formula spaces. [`formula`] holds the syntax, [`tree`] the
//! forcing-tree structure, and [`gen`] deterministic formula generators for
//! the cross-validation harnesses.

pub mod engine;
pub mod formula;
pub mod gen;
pub mod semantics;
pub mod tree;

pub use engine::{
    check_validity, check_validity_direct, extend_marks, format_trace, propagate, DirectOutcome,
    ExtendError, MarkDomain, MarkState, PropagateOutcome, RuleId, Trace, TraceStep,
    ValidityReason, Verdict,
};
pub use formula::{parse, render, Formula, ParseError, RenderStyle};
pub use semantics::{
    eval, t_validity, t_validity_limited, truth_table, Assignment, AtomLimitExceeded,
    MissingAtom, TableVerdict, TruthValue, DEFAULT_ATOM_LIMIT,
};
pub use tree::{argument_formula, argument_tree, build_tree, depth, ForcingTree};
