//! The classic P1/LPcAt example corpus: exact verdicts and refuting
//! assignments, checked through both decision routes.

use lpcat_core::semantics::{eval, t_validity, Assignment, TableVerdict, TruthValue};
use lpcat_core::{check_validity, parse, Verdict};
use TruthValue::{One, Star, Zero};

fn assign(pairs: &[(&str, TruthValue)]) -> Assignment {
    Assignment::from_pairs(pairs.iter().map(|(n, v)| (*n, *v)))
}

fn expect_valid(text: &str) {
    let f = parse(text).unwrap();
    assert!(check_validity(&f).is_valid(), "engine: {text} must be A-valid");
    assert!(
        t_validity(&f).unwrap().is_valid(),
        "oracle: {text} must be T-valid"
    );
}

fn expect_invalid(text: &str, model: &[(&str, TruthValue)]) {
    let f = parse(text).unwrap();
    let want = assign(model);
    match check_validity(&f) {
        Verdict::AInvalid { assignment, .. } => {
            assert_eq!(assignment, want, "engine model for {text}");
            assert_eq!(eval(&f, &assignment), Ok(Zero), "model refutes {text}");
        }
        Verdict::AValid { .. } => panic!("engine: {text} must be A-invalid"),
    }
    match t_validity(&f).unwrap() {
        TableVerdict::TInvalid(assignment) => {
            assert_eq!(eval(&f, &assignment), Ok(Zero), "oracle model refutes {text}");
        }
        TableVerdict::TValid => panic!("oracle: {text} must be T-invalid"),
    }
}

#[test]
fn trivialization_needs_the_guard() {
    expect_valid("#A -> (-A -> (A -> B))");
    expect_invalid("-A -> (A -> B)", &[("A", Star), ("B", Zero)]);
}

#[test]
fn reductio_needs_the_guard() {
    expect_valid("#B -> ((A -> B) -> ((A -> -B) -> -A))");
    expect_invalid("(A -> B) -> ((A -> -B) -> -A)", &[("A", One), ("B", Star)]);
}

#[test]
fn negated_conjunction_distributes() {
    expect_valid("-(A & B) -> (-A | -B)");
}

#[test]
fn disjunction_of_negations_needs_the_guard() {
    expect_invalid("(-A | -B) -> -(A & B)", &[("A", One), ("B", Star)]);
    expect_valid("(#A & #B) -> ((-A | -B) -> -(A & B))");
}

#[test]
fn incompatibility_does_not_transmit() {
    expect_invalid("((A & #A) & (A -> B)) -> #B", &[("A", One), ("B", Star)]);
}

#[test]
fn excluded_middle_holds() {
    expect_valid("A | -A");
}

#[test]
fn weak_negation_is_paraconsistent_at_the_atomic_level() {
    expect_invalid("A -> (-A -> B)", &[("A", Star), ("B", Zero)]);
    // with a compound in place of the atom, the weak negation is classical
    expect_valid("(p & p) -> (-(p & p) -> B)");
}

#[test]
fn strong_negation_trivializes_everywhere() {
    expect_valid("A -> (~A -> B)");
    expect_valid("(p & p) -> (~(p & p) -> B)");
}

#[test]
fn paraconsistency_contrast() {
    // the weak-negation form has a refutation while the strong-negation form
    // evaluates designated under every assignment
    let weak = parse("-A -> (A -> B)").unwrap();
    assert_eq!(
        eval(&weak, &assign(&[("A", Star), ("B", Zero)])),
        Ok(Zero)
    );
    let strong = parse("A -> (~A -> B)").unwrap();
    for a in lpcat_core::semantics::assignments(&strong.atoms()) {
        assert_ne!(eval(&strong, &a), Ok(Zero));
    }
}
