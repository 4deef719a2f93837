//! Deterministic formula generation for cross-validation harnesses.

use crate::formula::Formula;
use crate::semantics::{Assignment, TruthValue};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The reproducible RNG used by all sampling entry points.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One random formula over `atoms` with nesting depth at most `max_depth`.
/// The incompatibility operator is only ever applied to atoms.
pub fn random_formula(rng: &mut impl Rng, atoms: &[&str], max_depth: u32) -> Formula {
    if max_depth == 0 {
        return Formula::atom(atoms[rng.gen_range(0..atoms.len())]);
    }
    match rng.gen_range(0..9u32) {
        0 => Formula::atom(atoms[rng.gen_range(0..atoms.len())]),
        1 => Formula::incompat(atoms[rng.gen_range(0..atoms.len())]),
        2 => Formula::weak_neg(random_formula(rng, atoms, max_depth - 1)),
        3 => Formula::strong_neg(random_formula(rng, atoms, max_depth - 1)),
        4 => Formula::and(
            random_formula(rng, atoms, max_depth - 1),
            random_formula(rng, atoms, max_depth - 1),
        ),
        5 => Formula::or(
            random_formula(rng, atoms, max_depth - 1),
            random_formula(rng, atoms, max_depth - 1),
        ),
        6 | 7 => Formula::imp(
            random_formula(rng, atoms, max_depth - 1),
            random_formula(rng, atoms, max_depth - 1),
        ),
        _ => Formula::iff(
            random_formula(rng, atoms, max_depth - 1),
            random_formula(rng, atoms, max_depth - 1),
        ),
    }
}

/// A random total assignment over `atoms`.
pub fn random_assignment(rng: &mut impl Rng, atoms: &[String]) -> Assignment {
    let values = [TruthValue::Zero, TruthValue::Star, TruthValue::One];
    Assignment::from_pairs(
        atoms
            .iter()
            .map(|a| (a.clone(), values[rng.gen_range(0..3)])),
    )
}

/// A random two-valued (no `*`) assignment over `atoms`.
pub fn random_classical_assignment(rng: &mut impl Rng, atoms: &[String]) -> Assignment {
    let values = [TruthValue::Zero, TruthValue::One];
    Assignment::from_pairs(
        atoms
            .iter()
            .map(|a| (a.clone(), values[rng.gen_range(0..2)])),
    )
}

/// Every formula over `atoms` with connectives `- ~ # & | ->` and nesting
/// depth at most `max_depth`, `#` on atoms only, in a deterministic order.
///
/// Each formula decomposes uniquely at its root, so the space is enumerated
/// without repetition:
/// atoms, then `#p`, then `-X`/`~X` for `X` one level shallower, then the
/// three binary connectives over all shallower pairs.
pub fn formulas_up_to(atoms: &[&str], max_depth: u32) -> Vec<Formula> {
    let leaves: Vec<Formula> = atoms.iter().map(|a| Formula::atom(*a)).collect();
    if max_depth == 0 {
        return leaves;
    }
    let prev = formulas_up_to(atoms, max_depth - 1);
    let mut out = leaves;
    out.extend(atoms.iter().map(|a| Formula::incompat(*a)));
    for x in &prev {
        out.push(Formula::weak_neg(x.clone()));
        out.push(Formula::strong_neg(x.clone()));
    }
    for x in &prev {
        for y in &prev {
            out.push(Formula::and(x.clone(), y.clone()));
            out.push(Formula::or(x.clone(), y.clone()));
            out.push(Formula::imp(x.clone(), y.clone()));
        }
    }
    out
}

/// Number of formulas [`formulas_up_to`] yields, without materializing them.
pub fn formula_space_size(atom_count: usize, max_depth: u32) -> u64 {
    let a = atom_count as u64;
    if max_depth == 0 {
        return a;
    }
    let prev = formula_space_size(atom_count, max_depth - 1);
    a + a + 2 * prev + 3 * prev * prev
}
