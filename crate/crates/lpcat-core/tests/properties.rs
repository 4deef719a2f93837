//! Property suite: syntax round-trips, the semantic invariants, structural
//! tree facts, and engine/oracle agreement on randomly generated formulas.

use lpcat_core::engine::{
    check_validity, check_validity_direct, extend_marks, propagate, MarkState, PropagateOutcome,
    RuleId, Verdict,
};
use lpcat_core::formula::{parse, render, Formula, RenderStyle};
use lpcat_core::semantics::{assignments, eval, t_validity, Assignment, TruthValue};
use lpcat_core::tree::{build_tree, depth, ForcingTree, NodeId, NodeKind};
use proptest::prelude::*;

const ATOMS: &[&str] = &["p", "q", "r", "ab_1"];

fn formula_strategy(max_depth: u32) -> impl Strategy<Value = Formula> {
    let names: Vec<&'static str> = ATOMS.to_vec();
    let leaf = prop_oneof![
        3 => prop::sample::select(names.clone()).prop_map(Formula::atom),
        1 => prop::sample::select(names).prop_map(Formula::incompat),
    ];
    leaf.prop_recursive(max_depth, 64, 2, |inner| {
        prop_oneof![
            2 => inner.clone().prop_map(Formula::weak_neg),
            2 => inner.clone().prop_map(Formula::strong_neg),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            1 => (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn total_assignments(f: &Formula) -> Vec<Assignment> {
    assignments(&f.atoms()).collect()
}

/// Two-valued reading with both negations classical and `#p` constantly
/// true; the reference for the classical-collapse law.
fn classical(f: &Formula, v: &Assignment) -> bool {
    match f {
        Formula::Atom(n) => v.get(n) == Some(TruthValue::One),
        Formula::WeakNeg(x) | Formula::StrongNeg(x) => !classical(x, v),
        Formula::Incompat(_) => true,
        Formula::And(l, r) => classical(l, v) && classical(r, v),
        Formula::Or(l, r) => classical(l, v) || classical(r, v),
        Formula::Imp(l, r) => !classical(l, v) || classical(r, v),
        Formula::Iff(l, r) => classical(l, v) == classical(r, v),
    }
}

fn two_valued_assignments(f: &Formula) -> Vec<Assignment> {
    let atoms = f.atoms();
    let n = atoms.len() as u32;
    (0..2usize.pow(n))
        .map(|bits| {
            Assignment::from_pairs(atoms.iter().enumerate().map(|(i, a)| {
                let v = if bits >> i & 1 == 1 {
                    TruthValue::One
                } else {
                    TruthValue::Zero
                };
                (a.clone(), v)
            }))
        })
        .collect()
}

fn weighted_height(tree: &ForcingTree, node: NodeId) -> u32 {
    let n = tree.node(node);
    let edge = if n.kind == NodeKind::Incompat { 2 } else { 1 };
    n.children
        .iter()
        .map(|&c| edge + weighted_height(tree, c))
        .max()
        .unwrap_or(0)
}

fn occurrence_count(f: &Formula) -> usize {
    match f {
        Formula::Atom(_) => 1,
        Formula::Incompat(_) => 2,
        Formula::WeakNeg(x) | Formula::StrongNeg(x) => 1 + occurrence_count(x),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
            1 + occurrence_count(l) + occurrence_count(r)
        }
        Formula::Iff(_, _) => unreachable!("counted on expanded formulas"),
    }
}

proptest! {
    #[test]
    fn render_parse_round_trip(f in formula_strategy(5)) {
        for style in [RenderStyle::Ascii, RenderStyle::Unicode] {
            let text = render(&f, style);
            let back = parse(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
            prop_assert_eq!(&back, &f, "style {:?}, text {}", style, text);
        }
    }

    #[test]
    fn complexity_decreases_into_subformulas(f in formula_strategy(5)) {
        let children: Vec<&Formula> = match &f {
            Formula::Atom(_) | Formula::Incompat(_) => vec![],
            Formula::WeakNeg(x) | Formula::StrongNeg(x) => vec![x],
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Imp(l, r)
            | Formula::Iff(l, r) => vec![l, r],
        };
        for c in children {
            prop_assert!(c.complexity() < f.complexity());
        }
        if let Formula::Incompat(_) = &f {
            prop_assert_eq!(f.complexity(), 2);
        }
    }

    #[test]
    fn compounds_never_evaluate_to_star(f in formula_strategy(4)) {
        if !f.is_atom() {
            for a in total_assignments(&f) {
                prop_assert_ne!(eval(&f, &a).unwrap(), TruthValue::Star);
            }
        }
    }

    #[test]
    fn classical_collapse(f in formula_strategy(4)) {
        for a in two_valued_assignments(&f) {
            let want = if classical(&f, &a) { TruthValue::One } else { TruthValue::Zero };
            prop_assert_eq!(eval(&f, &a).unwrap(), want, "on {}", a);
        }
    }

    #[test]
    fn iff_evaluates_as_its_expansion(x in formula_strategy(3), y in formula_strategy(3)) {
        let sugar = Formula::iff(x.clone(), y.clone());
        let expanded = Formula::and(
            Formula::imp(x.clone(), y.clone()),
            Formula::imp(y, x),
        );
        for a in total_assignments(&sugar) {
            prop_assert_eq!(eval(&sugar, &a).unwrap(), eval(&expanded, &a).unwrap());
        }
    }

    #[test]
    fn depth_is_the_weighted_tree_height(f in formula_strategy(5)) {
        let tree = build_tree(&f);
        prop_assert_eq!(depth(&f), weighted_height(&tree, tree.root()));
    }

    #[test]
    fn node_count_is_the_occurrence_count(f in formula_strategy(5)) {
        let tree = build_tree(&f);
        prop_assert_eq!(tree.node_count(), occurrence_count(&f.expand_iff()));
    }

    #[test]
    fn cells_partition_by_structural_equality(f in formula_strategy(4)) {
        let tree = build_tree(&f);
        for a in tree.nodes() {
            for b in tree.nodes() {
                let same_formula = tree.node_formula(a.id) == tree.node_formula(b.id);
                prop_assert_eq!(a.cell == b.cell, same_formula);
            }
        }
    }

    #[test]
    fn engine_agrees_with_the_oracle(f in formula_strategy(4)) {
        let engine = check_validity(&f);
        let oracle = t_validity(&f).unwrap();
        prop_assert_eq!(engine.is_valid(), oracle.is_valid(), "on {}", f);
        if let Verdict::AInvalid { assignment, .. } = &engine {
            prop_assert_eq!(eval(&f, assignment).unwrap(), TruthValue::Zero);
        }
    }

    #[test]
    fn direct_forcing_is_sound(f in formula_strategy(3)) {
        if check_validity_direct(&f).is_forced() {
            prop_assert!(check_validity(&f).is_valid(), "on {}", f);
        }
    }

    #[test]
    fn extension_matches_eval_and_search_markings(f in formula_strategy(3)) {
        let tree = build_tree(&f);
        for a in total_assignments(&f) {
            let state = extend_marks(&tree, &a).unwrap();
            for (id, cell) in tree.cells().iter().enumerate() {
                let want = eval(&cell.formula, &a).unwrap();
                prop_assert_eq!(state.domain(id).as_singleton(), Some(want));
            }
        }
        // a well-marked tree found by search is the extension of its own
        // leaf marks
        if let Verdict::AInvalid { marking, assignment } = check_validity(&f) {
            let again = extend_marks(&tree, &assignment).unwrap();
            for id in 0..tree.cell_count() {
                prop_assert_eq!(marking.domain(id), again.domain(id));
            }
        }
    }

    #[test]
    fn propagation_never_prunes_a_solution(f in formula_strategy(3)) {
        let tree = build_tree(&f);
        let state = match propagate(&tree, MarkState::unconstrained(&tree)) {
            PropagateOutcome::Fixpoint(s) => s,
            PropagateOutcome::Contradiction(_) => {
                return Err(TestCaseError::fail("unconstrained propagation contradicted"));
            }
        };
        for a in total_assignments(&f) {
            let full = extend_marks(&tree, &a).unwrap();
            for id in 0..tree.cell_count() {
                let v = full.domain(id).as_singleton().unwrap();
                prop_assert!(
                    state.domain(id).contains(v),
                    "cell {} lost {} on {}", id, v, f
                );
            }
        }
    }

    #[test]
    fn propagation_shrinks_at_most_three_per_cell(f in formula_strategy(4)) {
        let tree = build_tree(&f);
        let mut state = MarkState::unconstrained(&tree);
        state.reject_root(&tree);
        let trace = match propagate(&tree, state) {
            PropagateOutcome::Fixpoint(s) => s.trace().clone(),
            PropagateOutcome::Contradiction(t) => t,
        };
        let shrinks = trace
            .steps()
            .iter()
            .filter(|s| s.rule != RuleId::Im && s.rule != RuleId::Rr)
            .count();
        prop_assert!(shrinks <= 3 * tree.cell_count());
    }
}
