//! Rule catalog: trace mnemonics and the local matrices they encode.
//!
//! Propagation computes full local consistency of each connective node
//! against its matrix; the named marking rules are exactly the local
//! inferences that can arise, so each domain shrink is mapped back to the
//! rule mnemonic it instantiates. `AC` labels a consistency shrink with no
//! catalog name (for instance an inference through two occurrences of one
//! subformula sitting on both sides of a connective).

use super::domain::MarkDomain;
use crate::semantics::TruthValue;
use crate::tree::NodeKind;
use std::fmt;

/// Trace step label: the rule catalog plus the seed, option and verdict
/// markers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleId {
    /// Seed of the indirect method: reject the root.
    Rr,
    /// A mark placed as an assumption, not by a rule.
    Om,
    /// Mark iteration: a mark travels to another occurrence of its formula.
    Im,
    /// An assumption refuted itself; its mark is removed.
    OiDm,
    /// Rejecting the root forced a double mark: the formula is valid.
    RrDm,
    /// Well-marked tree: every node marked, no double mark.
    Abm,
    /// The root was forced to 1: the formula is valid.
    Rm1,
    /// Unnamed local-consistency shrink.
    Ac,

    // option assumptions and conclusions
    AssumeOrd,
    AssumeOri,
    AssumeOnri,
    OrdRiImp,
    OnriNrdImp,
    OriNrdOr,
    OrdNriOr,

    // conditional
    RImp,
    NriRdImp,
    RiImp,
    NrdImp,
    NriAImp,
    RdAImp,

    // conjunction
    AAnd,
    NriNrdAnd,
    RiAnd,
    RdAnd,
    NriRAnd,
    NrdRAnd,

    // disjunction
    ROr,
    RiRdOr,
    NriOr,
    NrdOr,
    RiAOr,
    RdAOr,

    // strong negation
    AStrong,
    RaStrong,
    RStrong,
    NraStrong,

    // weak negation (questioning)
    AWeak,
    RaWeak,
    AStarWeak,
    AaWeak,
    RWeak,

    // incompatibility
    AInc,
    RInc,
    AStarInc,
    RaInc,
    AaInc,
    NraAInc,
}

impl RuleId {
    pub fn mnemonic(self) -> &'static str {
        use RuleId::*;
        match self {
            Rr => "RR",
            Om => "OM",
            Im => "IM",
            OiDm => "OI-DM",
            RrDm => "RR-DM",
            Abm => "ABM",
            Rm1 => "RM1",
            Ac => "AC",
            AssumeOrd => "ORd",
            AssumeOri => "ORi",
            AssumeOnri => "OnRi",
            OrdRiImp => "ORd-Ri→",
            OnriNrdImp => "OnRi-nRd→",
            OriNrdOr => "ORi-nRd∨",
            OrdNriOr => "ORd-nRi∨",
            RImp => "R→",
            NriRdImp => "nRiRd→",
            RiImp => "Ri→",
            NrdImp => "nRd→",
            NriAImp => "nRiA→",
            RdAImp => "RdA→",
            AAnd => "A∧",
            NriNrdAnd => "nRinRd∧",
            RiAnd => "Ri∧",
            RdAnd => "Rd∧",
            NriRAnd => "nRiR∧",
            NrdRAnd => "nRdR∧",
            ROr => "R∨",
            RiRdOr => "RiRd∨",
            NriOr => "nRi∨",
            NrdOr => "nRd∨",
            RiAOr => "RiA∨",
            RdAOr => "RdA∨",
            AStrong => "A~",
            RaStrong => "Ra~",
            RStrong => "R~",
            NraStrong => "nRa~",
            AWeak => "A¬",
            RaWeak => "Ra¬",
            AStarWeak => "A*a¬",
            AaWeak => "Aa¬",
            RWeak => "R¬",
            AInc => "AI",
            RInc => "RI",
            AStarInc => "A*a¬I",
            RaInc => "Ra¬I",
            AaInc => "Aa¬I",
            NraAInc => "nRa¬AI",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

/// Position of a cell inside one node-local constraint. Unary scopes sit in
/// `Left`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Member {
    Parent,
    Left,
    Right,
}

/// Value of a binary connective node given its children's marks.
pub(crate) fn binary_value(kind: NodeKind, l: TruthValue, r: TruthValue) -> TruthValue {
    use TruthValue::*;
    let designated = |v: TruthValue| v != Zero;
    match kind {
        // rejected exactly when the antecedent is not rejected and the
        // consequent is rejected
        NodeKind::Imp => {
            if designated(l) && r == Zero {
                Zero
            } else {
                One
            }
        }
        // accepted exactly when neither conjunct is rejected
        NodeKind::And => {
            if designated(l) && designated(r) {
                One
            } else {
                Zero
            }
        }
        // accepted exactly when some disjunct is not rejected
        NodeKind::Or => {
            if designated(l) || designated(r) {
                One
            } else {
                Zero
            }
        }
        other => unreachable!("not a binary connective: {other:?}"),
    }
}

/// Value of a unary operator node given its scope's mark.
pub(crate) fn unary_value(kind: NodeKind, scope: TruthValue) -> TruthValue {
    use TruthValue::*;
    match kind {
        // questioning rejects accepted formulas and accepts the rest
        NodeKind::WeakNeg => {
            if scope == One {
                Zero
            } else {
                One
            }
        }
        // strong negation rejects every designated value
        NodeKind::StrongNeg => {
            if scope == Zero {
                One
            } else {
                Zero
            }
        }
        // an atom is incompatible with its questioning unless it is
        // accepted by default
        NodeKind::Incompat => {
            if scope == Star {
                Zero
            } else {
                One
            }
        }
        other => unreachable!("not a unary operator: {other:?}"),
    }
}

/// How a shrink is reported: the mnemonic, the members whose marks the rule
/// cites, and whether the target's own previous mark is part of the premise.
pub(crate) struct ShrinkRule {
    pub rule: RuleId,
    pub cites: &'static [Member],
    pub cites_target_prior: bool,
}

const fn named(rule: RuleId, cites: &'static [Member]) -> ShrinkRule {
    ShrinkRule {
        rule,
        cites,
        cites_target_prior: false,
    }
}

const PARENT: &[Member] = &[Member::Parent];
const LEFT: &[Member] = &[Member::Left];
const RIGHT: &[Member] = &[Member::Right];
const PARENT_LEFT: &[Member] = &[Member::Parent, Member::Left];
const PARENT_RIGHT: &[Member] = &[Member::Parent, Member::Right];
const LEFT_RIGHT: &[Member] = &[Member::Left, Member::Right];

fn is0(d: MarkDomain) -> bool {
    d.as_singleton() == Some(TruthValue::Zero)
}
fn is1(d: MarkDomain) -> bool {
    d.as_singleton() == Some(TruthValue::One)
}
fn is_star(d: MarkDomain) -> bool {
    d.as_singleton() == Some(TruthValue::Star)
}
fn not0(d: MarkDomain) -> bool {
    !d.contains(TruthValue::Zero)
}

/// Maps a shrink at a binary node to its catalog entry. Domains are the
/// pre-shrink ones.
pub(crate) fn binary_shrink_rule(
    kind: NodeKind,
    target: Member,
    p: MarkDomain,
    l: MarkDomain,
    r: MarkDomain,
) -> ShrinkRule {
    use RuleId::*;
    match (kind, target) {
        (NodeKind::Imp, Member::Parent) => {
            if is0(l) {
                named(RiImp, LEFT)
            } else if not0(r) {
                named(NrdImp, RIGHT)
            } else if not0(l) && is0(r) {
                named(NriRdImp, LEFT_RIGHT)
            } else {
                named(Ac, LEFT_RIGHT)
            }
        }
        (NodeKind::Imp, Member::Left) => {
            if is0(p) {
                named(RImp, PARENT)
            } else if is1(p) && is0(r) {
                named(RdAImp, PARENT_RIGHT)
            } else {
                named(Ac, PARENT_RIGHT)
            }
        }
        (NodeKind::Imp, Member::Right) => {
            if is0(p) {
                named(RImp, PARENT)
            } else if is1(p) && not0(l) {
                named(NriAImp, PARENT_LEFT)
            } else {
                named(Ac, PARENT_LEFT)
            }
        }
        (NodeKind::And, Member::Parent) => {
            if is0(l) {
                named(RiAnd, LEFT)
            } else if is0(r) {
                named(RdAnd, RIGHT)
            } else if not0(l) && not0(r) {
                named(NriNrdAnd, LEFT_RIGHT)
            } else {
                named(Ac, LEFT_RIGHT)
            }
        }
        (NodeKind::And, Member::Left) => {
            if is1(p) {
                named(AAnd, PARENT)
            } else if is0(p) && not0(r) {
                named(NrdRAnd, PARENT_RIGHT)
            } else {
                named(Ac, PARENT_RIGHT)
            }
        }
        (NodeKind::And, Member::Right) => {
            if is1(p) {
                named(AAnd, PARENT)
            } else if is0(p) && not0(l) {
                named(NriRAnd, PARENT_LEFT)
            } else {
                named(Ac, PARENT_LEFT)
            }
        }
        (NodeKind::Or, Member::Parent) => {
            if not0(l) {
                named(NriOr, LEFT)
            } else if not0(r) {
                named(NrdOr, RIGHT)
            } else if is0(l) && is0(r) {
                named(RiRdOr, LEFT_RIGHT)
            } else {
                named(Ac, LEFT_RIGHT)
            }
        }
        (NodeKind::Or, Member::Left) => {
            if is0(p) {
                named(ROr, PARENT)
            } else if is1(p) && is0(r) {
                named(RdAOr, PARENT_RIGHT)
            } else {
                named(Ac, PARENT_RIGHT)
            }
        }
        (NodeKind::Or, Member::Right) => {
            if is0(p) {
                named(ROr, PARENT)
            } else if is1(p) && is0(l) {
                named(RiAOr, PARENT_LEFT)
            } else {
                named(Ac, PARENT_LEFT)
            }
        }
        other => unreachable!("binary shrink at {other:?}"),
    }
}

/// Maps a shrink at a unary node to its catalog entry; the scope sits in
/// `Left`.
pub(crate) fn unary_shrink_rule(
    kind: NodeKind,
    target: Member,
    p: MarkDomain,
    scope: MarkDomain,
) -> ShrinkRule {
    use RuleId::*;
    match (kind, target) {
        (NodeKind::StrongNeg, Member::Parent) => {
            if is0(scope) {
                named(RaStrong, LEFT)
            } else if not0(scope) {
                named(NraStrong, LEFT)
            } else {
                named(Ac, LEFT)
            }
        }
        (NodeKind::StrongNeg, Member::Left) => {
            if is1(p) {
                named(AStrong, PARENT)
            } else if is0(p) {
                named(RStrong, PARENT)
            } else {
                named(Ac, PARENT)
            }
        }
        (NodeKind::WeakNeg, Member::Parent) => {
            if is0(scope) {
                named(RaWeak, LEFT)
            } else if is_star(scope) {
                named(AStarWeak, LEFT)
            } else if is1(scope) {
                named(AaWeak, LEFT)
            } else {
                named(Ac, LEFT)
            }
        }
        (NodeKind::WeakNeg, Member::Left) => {
            if is0(p) {
                named(RWeak, PARENT)
            } else if is1(p) {
                named(AWeak, PARENT)
            } else {
                named(Ac, PARENT)
            }
        }
        (NodeKind::Incompat, Member::Parent) => {
            if is_star(scope) {
                named(AStarInc, LEFT)
            } else if is0(scope) {
                named(RaInc, LEFT)
            } else if is1(scope) {
                named(AaInc, LEFT)
            } else {
                named(Ac, LEFT)
            }
        }
        (NodeKind::Incompat, Member::Left) => {
            if is0(p) {
                named(RInc, PARENT)
            } else if is1(p) && not0(scope) {
                // atoms that are not rejected and are incompatible with
                // their questioning are accepted; the target's own mark is
                // part of the premise
                ShrinkRule {
                    rule: NraAInc,
                    cites: PARENT,
                    cites_target_prior: true,
                }
            } else if is1(p) {
                named(AInc, PARENT)
            } else {
                named(Ac, PARENT)
            }
        }
        other => unreachable!("unary shrink at {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue::*;

    #[test]
    fn matrices_match_the_tables() {
        // -> by rows 1,*,0
        let imp = |l, r| binary_value(NodeKind::Imp, l, r);
        assert_eq!(
            [
                imp(One, One), imp(One, Star), imp(One, Zero),
                imp(Star, One), imp(Star, Star), imp(Star, Zero),
                imp(Zero, One), imp(Zero, Star), imp(Zero, Zero),
            ],
            [One, One, Zero, One, One, Zero, One, One, One]
        );
        let and = |l, r| binary_value(NodeKind::And, l, r);
        assert_eq!(
            [
                and(One, One), and(One, Star), and(One, Zero),
                and(Star, One), and(Star, Star), and(Star, Zero),
                and(Zero, One), and(Zero, Star), and(Zero, Zero),
            ],
            [One, One, Zero, One, One, Zero, Zero, Zero, Zero]
        );
        let or = |l, r| binary_value(NodeKind::Or, l, r);
        assert_eq!(
            [
                or(One, One), or(One, Star), or(One, Zero),
                or(Star, One), or(Star, Star), or(Star, Zero),
                or(Zero, One), or(Zero, Star), or(Zero, Zero),
            ],
            [One, One, One, One, One, One, One, One, Zero]
        );
        let weak = |c| unary_value(NodeKind::WeakNeg, c);
        assert_eq!([weak(One), weak(Star), weak(Zero)], [Zero, One, One]);
        let strong = |c| unary_value(NodeKind::StrongNeg, c);
        assert_eq!([strong(One), strong(Star), strong(Zero)], [Zero, Zero, One]);
        let inc = |c| unary_value(NodeKind::Incompat, c);
        assert_eq!([inc(One), inc(Star), inc(Zero)], [One, Zero, One]);
    }

    #[test]
    fn mnemonic_selection() {
        use MarkDomain as D;
        let s = |v| D::singleton(v);
        // a rejected conditional splits by R→
        let rule = binary_shrink_rule(NodeKind::Imp, Member::Left, s(Zero), D::ATOM_ALL, D::COMPOUND_ALL);
        assert_eq!(rule.rule, RuleId::RImp);
        // rejected antecedent accepts the conditional
        let rule = binary_shrink_rule(NodeKind::Imp, Member::Parent, D::COMPOUND_ALL, s(Zero), D::ATOM_ALL);
        assert_eq!(rule.rule, RuleId::RiImp);
        // accepted conjunction frees both conjuncts
        let rule = binary_shrink_rule(NodeKind::And, Member::Right, s(One), D::ATOM_ALL, D::ATOM_ALL);
        assert_eq!(rule.rule, RuleId::AAnd);
        // questioning of an accepted formula
        let rule = unary_shrink_rule(NodeKind::WeakNeg, Member::Parent, D::COMPOUND_ALL, s(One));
        assert_eq!(rule.rule, RuleId::AaWeak);
        // unrejected incompatible atom becomes accepted, citing its own mark
        let rule = unary_shrink_rule(
            NodeKind::Incompat,
            Member::Left,
            s(One),
            D::ATOM_ALL.remove(Zero),
        );
        assert_eq!(rule.rule, RuleId::NraAInc);
        assert!(rule.cites_target_prior);
    }
}
