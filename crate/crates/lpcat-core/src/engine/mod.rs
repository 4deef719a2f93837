//! The forcing machine: mark domains, rule-driven propagation, validity
//! search and counterexample extraction.
//!
//! Marks live per shared cell as candidate sets that only ever shrink.
//! Propagation makes every connective node locally consistent with its
//! matrix, which realizes the whole primitive and derived rule catalog at
//! once; each shrink is logged under the catalog mnemonic it instantiates.
//!
//! Two analyses are built on top:
//!
//! * [`check_validity`] — the indirect method. Reject the root (`RR`),
//!   propagate, and split on an undetermined cell when stuck (`OM`). A branch
//!   that double-marks refutes its assumption (`OI-DM`); if every option
//!   dies the tree is badly marked and the formula is valid (`RR-DM`). If
//!   some branch marks every node consistently the tree is well marked
//!   (`ABM`), the formula is invalid, and the atom cells spell out the
//!   refuting assignment.
//! * [`check_validity_direct`] — the direct method. Try to force the root to
//!   1 without rejecting it, using the option rules for the conditional and
//!   the disjunction plus mark options as subordinate hypothetical runs.
//!   Best effort: `NotForced` does not decide anything.

mod domain;
mod rules;
mod trace;

pub use domain::MarkDomain;
pub use rules::RuleId;
pub use trace::{format_trace, Trace, TraceStep};

use crate::formula::Formula;
use crate::semantics::{Assignment, TruthValue};
use crate::tree::{build_tree, CellId, ForcingTree, NodeId, NodeKind};
use rules::{binary_shrink_rule, binary_value, unary_shrink_rule, unary_value, Member, ShrinkRule};
use std::collections::VecDeque;
use std::fmt;

/// Where a cell's current mark was last established.
#[derive(Clone, Copy, Debug)]
struct Attr {
    node: NodeId,
    step: u32,
}

/// Per-cell candidate marks plus the justification trace.
#[derive(Clone, Debug)]
pub struct MarkState {
    domains: Vec<MarkDomain>,
    attrs: Vec<Option<Attr>>,
    trace: Trace,
}

impl MarkState {
    /// Every cell at its full allowed set: `{0,*,1}` for atoms, `{0,1}` for
    /// compounds.
    pub fn unconstrained(tree: &ForcingTree) -> Self {
        let domains = tree
            .cells()
            .iter()
            .map(|c| {
                if c.is_atom() {
                    MarkDomain::ATOM_ALL
                } else {
                    MarkDomain::COMPOUND_ALL
                }
            })
            .collect();
        MarkState {
            domains,
            attrs: vec![None; tree.cell_count()],
            trace: Trace::new(),
        }
    }

    pub fn domain(&self, cell: CellId) -> MarkDomain {
        self.domains[cell]
    }

    /// Current candidate set at a node (through its cell).
    pub fn node_domain(&self, tree: &ForcingTree, node: NodeId) -> MarkDomain {
        self.domains[tree.node(node).cell]
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    pub fn is_fully_marked(&self) -> bool {
        self.domains.iter().all(|d| d.as_singleton().is_some())
    }

    /// Seeds the indirect method: marks the root with 0 (`RR`).
    pub fn reject_root(&mut self, tree: &ForcingTree) -> u32 {
        let root = tree.root();
        let cell = tree.node(root).cell;
        let step = self.trace.push(
            RuleId::Rr,
            root,
            MarkDomain::singleton(TruthValue::Zero),
            vec![],
        );
        self.domains[cell] = MarkDomain::singleton(TruthValue::Zero);
        self.attrs[cell] = Some(Attr { node: root, step });
        step
    }

    /// Places a mark without rule justification (`OM`).
    pub fn assume(&mut self, tree: &ForcingTree, cell: CellId, value: TruthValue) -> u32 {
        debug_assert!(self.domains[cell].contains(value));
        let node = self
            .attrs[cell]
            .map(|a| a.node)
            .unwrap_or_else(|| tree.cell(cell).first_node());
        let step = self
            .trace
            .push(RuleId::Om, node, MarkDomain::singleton(value), vec![]);
        self.domains[cell] = MarkDomain::singleton(value);
        self.attrs[cell] = Some(Attr { node, step });
        step
    }

    /// Reads the atom marks off as an assignment; `None` while some atom cell
    /// is still undetermined.
    pub fn leaf_assignment(&self, tree: &ForcingTree) -> Option<Assignment> {
        let mut a = Assignment::new();
        for (cell, name) in tree.atom_cells() {
            a.set(name, self.domains[cell].as_singleton()?);
        }
        Some(a)
    }
}

/// Result of running propagation to a fixpoint.
#[derive(Debug, Clone)]
pub enum PropagateOutcome {
    Fixpoint(MarkState),
    /// Some cell was demanded to take incompatible marks; the trace ends
    /// with the clashing demand.
    Contradiction(Trace),
}

/// Verdict of the canonical (indirect) analysis.
#[derive(Debug, Clone)]
pub enum Verdict {
    AValid {
        reason: ValidityReason,
        trace: Trace,
    },
    AInvalid {
        /// The well-marked tree: every cell a singleton.
        marking: MarkState,
        /// Leaf marks; always evaluates the formula to 0.
        assignment: Assignment,
    },
}

/// How validity was concluded: the root was forced to 1 directly, or
/// rejecting it double-marked the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidityReason {
    Rm1,
    Amm,
}

impl fmt::Display for ValidityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValidityReason::Rm1 => "RM1",
            ValidityReason::Amm => "AMM",
        })
    }
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::AValid { .. })
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        match self {
            Verdict::AValid { .. } => None,
            Verdict::AInvalid { assignment, .. } => Some(assignment),
        }
    }

    pub fn trace(&self) -> &Trace {
        match self {
            Verdict::AValid { trace, .. } => trace,
            Verdict::AInvalid { marking, .. } => marking.trace(),
        }
    }
}

/// Outcome of the direct method.
#[derive(Debug, Clone)]
pub enum DirectOutcome {
    /// The root was forced to 1; the formula is valid (`RM1`).
    Forced1(Trace),
    /// No option applied; nothing is concluded.
    NotForced,
}

impl DirectOutcome {
    pub fn is_forced(&self) -> bool {
        matches!(self, DirectOutcome::Forced1(_))
    }

    /// The corresponding verdict, when one follows.
    pub fn into_verdict(self) -> Option<Verdict> {
        match self {
            DirectOutcome::Forced1(trace) => Some(Verdict::AValid {
                reason: ValidityReason::Rm1,
                trace,
            }),
            DirectOutcome::NotForced => None,
        }
    }
}

/// The leaf marks do not cover some atom of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendError {
    MissingAtom(String),
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::MissingAtom(name) => {
                write!(f, "leaf marks do not cover atom '{name}'")
            }
        }
    }
}

impl std::error::Error for ExtendError {}

/// One node-local constraint: the node's cell against its children's cells.
#[derive(Clone, Copy)]
struct Constraint {
    kind: NodeKind,
    parent: (CellId, NodeId),
    left: (CellId, NodeId),
    right: Option<(CellId, NodeId)>,
}

impl Constraint {
    fn member(&self, m: Member) -> (CellId, NodeId) {
        match m {
            Member::Parent => self.parent,
            Member::Left => self.left,
            Member::Right => self.right.expect("binary constraint"),
        }
    }
}

struct TrailEntry {
    cell: CellId,
    domain: MarkDomain,
    attr: Option<Attr>,
}

struct Clash {
    clash_step: u32,
    existing_step: Option<u32>,
}

struct Engine<'t> {
    tree: &'t ForcingTree,
    constraints: Vec<Constraint>,
    cell_constraints: Vec<Vec<u32>>,
    state: MarkState,
    trail: Vec<TrailEntry>,
    queue: VecDeque<u32>,
    queued: Vec<bool>,
}

impl<'t> Engine<'t> {
    fn new(tree: &'t ForcingTree) -> Self {
        Engine::with_state(tree, MarkState::unconstrained(tree))
    }

    fn with_state(tree: &'t ForcingTree, state: MarkState) -> Self {
        let mut constraints = Vec::new();
        let mut cell_constraints = vec![Vec::new(); tree.cell_count()];
        for node in tree.nodes() {
            if node.kind == NodeKind::Leaf {
                continue;
            }
            let parent = (node.cell, node.id);
            let left_id = node.children[0];
            let left = (tree.node(left_id).cell, left_id);
            let right = node.children.get(1).map(|&id| (tree.node(id).cell, id));
            let ci = constraints.len() as u32;
            constraints.push(Constraint {
                kind: node.kind,
                parent,
                left,
                right,
            });
            let mut touched = vec![parent.0, left.0];
            if let Some((c, _)) = right {
                touched.push(c);
            }
            touched.dedup();
            for cell in touched {
                cell_constraints[cell].push(ci);
            }
        }
        let queue: VecDeque<u32> = (0..constraints.len() as u32).collect();
        let queued = vec![true; constraints.len()];
        Engine {
            tree,
            constraints,
            cell_constraints,
            state,
            trail: Vec::new(),
            queue,
            queued,
        }
    }

    fn into_state(self) -> MarkState {
        self.state
    }

    fn enqueue_cell(&mut self, cell: CellId) {
        for i in 0..self.cell_constraints[cell].len() {
            let ci = self.cell_constraints[cell][i];
            if !self.queued[ci as usize] {
                self.queued[ci as usize] = true;
                self.queue.push_back(ci);
            }
        }
    }

    fn requeue_all(&mut self) {
        self.queue.clear();
        for ci in 0..self.constraints.len() as u32 {
            self.queued[ci as usize] = true;
            self.queue.push_back(ci);
        }
    }

    fn set_domain(&mut self, cell: CellId, domain: MarkDomain, attr: Option<Attr>) {
        self.trail.push(TrailEntry {
            cell,
            domain: self.state.domains[cell],
            attr: self.state.attrs[cell],
        });
        self.state.domains[cell] = domain;
        self.state.attrs[cell] = attr;
    }

    fn rollback(&mut self, checkpoint: usize) {
        while self.trail.len() > checkpoint {
            let e = self.trail.pop().expect("trail entry");
            self.state.domains[e.cell] = e.domain;
            self.state.attrs[e.cell] = e.attr;
        }
    }

    /// Re-attributes a cell's current mark to `node`, logging an `IM` step,
    /// and returns the step now standing for the mark.
    fn attribute_to(&mut self, cell: CellId, node: NodeId) -> Option<u32> {
        let attr = self.state.attrs[cell]?;
        if attr.node == node {
            return Some(attr.step);
        }
        let dom = self.state.domains[cell];
        let im = self.state.trace.push(RuleId::Im, node, dom, vec![attr.step]);
        self.trail.push(TrailEntry {
            cell,
            domain: dom,
            attr: Some(attr),
        });
        self.state.attrs[cell] = Some(Attr { node, step: im });
        Some(im)
    }

    /// Shrinks `target` of constraint `c` to its supported set `sup`,
    /// logging the catalog rule. Errors when the intersection double-marks.
    fn fire(
        &mut self,
        c: &Constraint,
        target: Member,
        sup: MarkDomain,
        sr: ShrinkRule,
    ) -> Result<(), Clash> {
        let (tcell, tnode) = c.member(target);
        // bring the mark this shrink builds on over to the target occurrence
        let prior = self.attribute_to(tcell, tnode);
        let mut premises = Vec::new();
        for &m in sr.cites {
            let (cell, node) = c.member(m);
            if let Some(step) = self.attribute_to(cell, node) {
                if !premises.contains(&step) {
                    premises.push(step);
                }
            }
        }
        if sr.cites_target_prior {
            if let Some(step) = prior {
                if !premises.contains(&step) {
                    premises.push(step);
                }
            }
        }
        let old = self.state.domains[tcell];
        let next = old.intersect(sup);
        if next.is_empty() {
            // report the clashing demand itself as the double mark
            let clash_step = self.state.trace.push(sr.rule, tnode, sup, premises);
            return Err(Clash {
                clash_step,
                existing_step: prior,
            });
        }
        let step = self.state.trace.push(sr.rule, tnode, next, premises);
        self.set_domain(tcell, next, Some(Attr { node: tnode, step }));
        self.enqueue_cell(tcell);
        Ok(())
    }

    /// Restores local consistency at one constraint, shrinking members as
    /// needed until nothing more follows there.
    fn process_constraint(&mut self, ci: u32) -> Result<(), Clash> {
        let c = self.constraints[ci as usize];
        loop {
            let dp = self.state.domains[c.parent.0];
            let dl = self.state.domains[c.left.0];
            match c.right {
                Some(right) => {
                    let dr = self.state.domains[right.0];
                    let mut sup_p = MarkDomain::EMPTY;
                    let mut sup_l = MarkDomain::EMPTY;
                    let mut sup_r = MarkDomain::EMPTY;
                    if c.left.0 == right.0 {
                        // both sides are occurrences of one formula and must
                        // carry one mark
                        for a in dl.values() {
                            let v = binary_value(c.kind, a, a);
                            sup_p.insert(v);
                            if dp.contains(v) {
                                sup_l.insert(a);
                            }
                        }
                        sup_r = sup_l;
                    } else {
                        for a in dl.values() {
                            for b in dr.values() {
                                let v = binary_value(c.kind, a, b);
                                sup_p.insert(v);
                                if dp.contains(v) {
                                    sup_l.insert(a);
                                    sup_r.insert(b);
                                }
                            }
                        }
                    }
                    if dp.intersect(sup_p) != dp {
                        let sr = binary_shrink_rule(c.kind, Member::Parent, dp, dl, dr);
                        self.fire(&c, Member::Parent, sup_p, sr)?;
                    } else if dl.intersect(sup_l) != dl {
                        let sr = binary_shrink_rule(c.kind, Member::Left, dp, dl, dr);
                        self.fire(&c, Member::Left, sup_l, sr)?;
                    } else if dr.intersect(sup_r) != dr {
                        let sr = binary_shrink_rule(c.kind, Member::Right, dp, dl, dr);
                        self.fire(&c, Member::Right, sup_r, sr)?;
                    } else {
                        return Ok(());
                    }
                }
                None => {
                    let mut sup_p = MarkDomain::EMPTY;
                    let mut sup_c = MarkDomain::EMPTY;
                    for a in dl.values() {
                        let v = unary_value(c.kind, a);
                        sup_p.insert(v);
                        if dp.contains(v) {
                            sup_c.insert(a);
                        }
                    }
                    if dp.intersect(sup_p) != dp {
                        let sr = unary_shrink_rule(c.kind, Member::Parent, dp, dl);
                        self.fire(&c, Member::Parent, sup_p, sr)?;
                    } else if dl.intersect(sup_c) != dl {
                        let sr = unary_shrink_rule(c.kind, Member::Left, dp, dl);
                        self.fire(&c, Member::Left, sup_c, sr)?;
                    } else {
                        return Ok(());
                    }
                }
            }
        }
    }

    fn propagate_to_fixpoint(&mut self) -> Result<(), Clash> {
        while let Some(ci) = self.queue.pop_front() {
            self.queued[ci as usize] = false;
            self.process_constraint(ci)?;
        }
        Ok(())
    }

    /// Smallest domain first, then the deepest subformula, then the earliest
    /// occurrence. Cell ids follow first occurrence, so the ascending scan
    /// with strict improvement settles the last tie.
    fn pick_branch_cell(&self) -> Option<CellId> {
        let mut best: Option<(usize, u32, CellId)> = None;
        for (id, info) in self.tree.cells().iter().enumerate() {
            let len = self.state.domains[id].len();
            if len <= 1 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bl, bd, _)) => len < bl || (len == bl && info.depth > bd),
            };
            if better {
                best = Some((len, info.depth, id));
            }
        }
        best.map(|(_, _, id)| id)
    }

    fn assume_node(&self, cell: CellId) -> NodeId {
        self.state.attrs[cell]
            .map(|a| a.node)
            .unwrap_or_else(|| self.tree.cell(cell).first_node())
    }

    /// Depth-first refutation search. `Ok` means every cell is a singleton
    /// and consistent; `Err` carries the double mark that killed the last
    /// open option of this state.
    fn solve(&mut self) -> Result<(), Clash> {
        loop {
            self.propagate_to_fixpoint()?;
            let Some(cell) = self.pick_branch_cell() else {
                return Ok(());
            };
            let dom = self.state.domains[cell];
            let value = dom.values().next().expect("live domain");
            let node = self.assume_node(cell);
            let assume_step =
                self.state
                    .trace
                    .push(RuleId::Om, node, MarkDomain::singleton(value), vec![]);
            let checkpoint = self.trail.len();
            self.set_domain(
                cell,
                MarkDomain::singleton(value),
                Some(Attr {
                    node,
                    step: assume_step,
                }),
            );
            self.enqueue_cell(cell);
            match self.solve() {
                Ok(()) => return Ok(()),
                Err(clash) => {
                    // the assumed mark double-marked the tree, so the cell
                    // does not carry it
                    self.rollback(checkpoint);
                    self.requeue_all();
                    let narrowed = dom.remove(value);
                    debug_assert!(!narrowed.is_empty());
                    let oi_node = self.assume_node(cell);
                    let step = self.state.trace.push(
                        RuleId::OiDm,
                        oi_node,
                        narrowed,
                        vec![assume_step, clash.clash_step],
                    );
                    self.set_domain(
                        cell,
                        narrowed,
                        Some(Attr {
                            node: oi_node,
                            step,
                        }),
                    );
                }
            }
        }
    }
}

/// Runs propagation on `state` until nothing more follows or a double mark
/// appears.
pub fn propagate(tree: &ForcingTree, state: MarkState) -> PropagateOutcome {
    let mut eng = Engine::with_state(tree, state);
    match eng.propagate_to_fixpoint() {
        Ok(()) => PropagateOutcome::Fixpoint(eng.into_state()),
        Err(_) => PropagateOutcome::Contradiction(eng.into_state().trace),
    }
}

/// Decides A-validity by the indirect method: reject the root and search for
/// a well-marked tree.
///
/// Deterministic: options are tried smallest-domain-first, deepest-first,
/// earliest-first, with values in the order `0, *, 1`. An `AInvalid` verdict
/// carries the full singleton marking and the refuting leaf assignment.
pub fn check_validity(f: &Formula) -> Verdict {
    let tree = build_tree(f);
    let mut eng = Engine::new(&tree);
    let seed = eng.state.reject_root(&tree);
    let root = tree.root();
    let root_cell = tree.node(root).cell;
    match eng.solve() {
        Ok(()) => {
            eng.state.trace.push(
                RuleId::Abm,
                root,
                eng.state.domains[root_cell],
                vec![],
            );
            let state = eng.into_state();
            let assignment = state
                .leaf_assignment(&tree)
                .expect("well-marked tree has singleton leaves");
            debug_assert_eq!(
                crate::semantics::eval(tree.formula(), &assignment),
                Ok(TruthValue::Zero),
                "well-marked tree must refute the formula"
            );
            Verdict::AInvalid {
                marking: state,
                assignment,
            }
        }
        Err(clash) => {
            let mut premises = vec![seed];
            if let Some(existing) = clash.existing_step {
                if !premises.contains(&existing) {
                    premises.push(existing);
                }
            }
            if !premises.contains(&clash.clash_step) {
                premises.push(clash.clash_step);
            }
            eng.state.trace.push(
                RuleId::RrDm,
                root,
                MarkDomain::singleton(TruthValue::One),
                premises,
            );
            Verdict::AValid {
                reason: ValidityReason::Amm,
                trace: eng.into_state().trace,
            }
        }
    }
}

/// The named option rules of the direct method.
#[derive(Clone, Copy)]
enum NamedOption {
    /// assume the consequent rejected; if the antecedent comes out rejected,
    /// the conditional is accepted
    OrdImp,
    /// assume the antecedent not rejected; if the consequent comes out not
    /// rejected, the conditional is accepted
    OnriImp,
    /// assume the left disjunct rejected; if the right one comes out not
    /// rejected, the disjunction is accepted
    OriOr,
    /// assume the right disjunct rejected; if the left one comes out not
    /// rejected, the disjunction is accepted
    OrdOr,
}

impl<'t> Engine<'t> {
    /// Assumes `dom` on `cell` inside a hypothetical run; on refutation the
    /// assumption is withdrawn for good (`OI-DM`), on an emerged consequent
    /// the caller concludes, otherwise the exploration is discarded.
    fn hypothetical(
        &mut self,
        rule: RuleId,
        cell: CellId,
        assumed: MarkDomain,
    ) -> (u32, usize, usize, Result<(), Clash>) {
        let node = self.assume_node(cell);
        let trace_len = self.state.trace.len();
        let assume_step = self.state.trace.push(rule, node, assumed, vec![]);
        let checkpoint = self.trail.len();
        self.set_domain(
            cell,
            assumed,
            Some(Attr {
                node,
                step: assume_step,
            }),
        );
        self.enqueue_cell(cell);
        let outcome = self.propagate_to_fixpoint();
        (assume_step, trace_len, checkpoint, outcome)
    }

    /// Closes a refuted hypothetical by removing the assumed marks.
    fn refute_assumption(
        &mut self,
        cell: CellId,
        original: MarkDomain,
        assumed: MarkDomain,
        assume_step: u32,
        clash: Clash,
        checkpoint: usize,
    ) {
        self.rollback(checkpoint);
        self.requeue_all();
        let narrowed = original.difference(assumed);
        debug_assert!(!narrowed.is_empty());
        let node = self.assume_node(cell);
        let step = self.state.trace.push(
            RuleId::OiDm,
            node,
            narrowed,
            vec![assume_step, clash.clash_step],
        );
        self.set_domain(cell, narrowed, Some(Attr { node, step }));
    }

    fn try_named_option(&mut self, c: &Constraint, opt: NamedOption) -> bool {
        let (pcell, pnode) = c.parent;
        if self.state.domains[pcell].as_singleton().is_some() {
            return false;
        }
        let (assume_rule, conclude_rule, assume_member, check_member) = match opt {
            NamedOption::OrdImp => (
                RuleId::AssumeOrd,
                RuleId::OrdRiImp,
                Member::Right,
                Member::Left,
            ),
            NamedOption::OnriImp => (
                RuleId::AssumeOnri,
                RuleId::OnriNrdImp,
                Member::Left,
                Member::Right,
            ),
            NamedOption::OriOr => (
                RuleId::AssumeOri,
                RuleId::OriNrdOr,
                Member::Left,
                Member::Right,
            ),
            NamedOption::OrdOr => (
                RuleId::AssumeOrd,
                RuleId::OrdNriOr,
                Member::Right,
                Member::Left,
            ),
        };
        let (acell, _) = c.member(assume_member);
        let original = self.state.domains[acell];
        let assumed = match opt {
            // OnRi assumes "not rejected"
            NamedOption::OnriImp => original.remove(TruthValue::Zero),
            _ => MarkDomain::singleton(TruthValue::Zero),
        };
        if !original.contains(TruthValue::Zero) || original.len() < 2 {
            return false;
        }
        let (assume_step, trace_len, checkpoint, outcome) =
            self.hypothetical(assume_rule, acell, assumed);
        match outcome {
            Err(clash) => {
                self.refute_assumption(acell, original, assumed, assume_step, clash, checkpoint);
                true
            }
            Ok(()) => {
                let (ccell, _) = c.member(check_member);
                let emerged = match opt {
                    // the antecedent (or mirror disjunct) came out rejected
                    NamedOption::OrdImp => {
                        self.state.domains[ccell].as_singleton() == Some(TruthValue::Zero)
                    }
                    _ => !self.state.domains[ccell].contains(TruthValue::Zero),
                };
                if emerged {
                    let consequent_step = self.state.attrs[ccell]
                        .map(|a| a.step)
                        .unwrap_or(assume_step);
                    self.rollback(checkpoint);
                    self.requeue_all();
                    let forced = MarkDomain::singleton(TruthValue::One);
                    let step = self.state.trace.push(
                        conclude_rule,
                        pnode,
                        forced,
                        vec![assume_step, consequent_step],
                    );
                    self.set_domain(pcell, forced, Some(Attr { node: pnode, step }));
                    self.enqueue_cell(pcell);
                    true
                } else {
                    self.rollback(checkpoint);
                    self.requeue_all();
                    self.state.trace.truncate(trace_len);
                    false
                }
            }
        }
    }

    fn try_mark_option(&mut self, cell: CellId, value: TruthValue) -> bool {
        let original = self.state.domains[cell];
        let assumed = MarkDomain::singleton(value);
        let (assume_step, trace_len, checkpoint, outcome) =
            self.hypothetical(RuleId::Om, cell, assumed);
        match outcome {
            Err(clash) => {
                self.refute_assumption(cell, original, assumed, assume_step, clash, checkpoint);
                true
            }
            Ok(()) => {
                self.rollback(checkpoint);
                self.requeue_all();
                self.state.trace.truncate(trace_len);
                false
            }
        }
    }

    fn try_options(&mut self) -> bool {
        for ci in 0..self.constraints.len() {
            let c = self.constraints[ci];
            let made_progress = match c.kind {
                NodeKind::Imp => {
                    self.try_named_option(&c, NamedOption::OrdImp)
                        || self.try_named_option(&c, NamedOption::OnriImp)
                }
                NodeKind::Or => {
                    self.try_named_option(&c, NamedOption::OriOr)
                        || self.try_named_option(&c, NamedOption::OrdOr)
                }
                _ => false,
            };
            if made_progress {
                return true;
            }
        }
        for cell in 0..self.tree.cell_count() {
            let dom = self.state.domains[cell];
            if dom.len() < 2 {
                continue;
            }
            for value in dom.values() {
                if self.try_mark_option(cell, value) {
                    return true;
                }
            }
        }
        false
    }
}

/// The direct method: tries to force the root to 1 without rejecting it.
///
/// Option rules run as one-level hypothetical propagations; a hypothesis
/// that double-marks is withdrawn (`OI-DM`), one whose consequent emerges
/// concludes its rule on the main state. Returns `Forced1` as soon as the
/// root's domain is `{1}`; `NotForced` once no option makes progress.
pub fn check_validity_direct(f: &Formula) -> DirectOutcome {
    let tree = build_tree(f);
    let mut eng = Engine::new(&tree);
    let root_cell = tree.node(tree.root()).cell;
    loop {
        eng.propagate_to_fixpoint()
            .unwrap_or_else(|_| unreachable!("sound rules cannot double-mark without a seed"));
        if eng.state.domains[root_cell].as_singleton() == Some(TruthValue::One) {
            let premise = eng.state.attrs[root_cell]
                .map(|a| vec![a.step])
                .unwrap_or_default();
            eng.state.trace.push(
                RuleId::Rm1,
                tree.root(),
                MarkDomain::singleton(TruthValue::One),
                premise,
            );
            return DirectOutcome::Forced1(eng.into_state().trace);
        }
        if !eng.try_options() {
            return DirectOutcome::NotForced;
        }
    }
}

/// Extends total leaf marks to the unique consistent marking of every cell.
///
/// The result agrees with evaluating each cell's subformula under
/// `leaf_marks`.
pub fn extend_marks(tree: &ForcingTree, leaf_marks: &Assignment) -> Result<MarkState, ExtendError> {
    let mut eng = Engine::new(tree);
    for (cell, name) in tree.atom_cells() {
        let value = leaf_marks
            .get(name)
            .ok_or_else(|| ExtendError::MissingAtom(name.to_string()))?;
        let node = tree.cell(cell).first_node();
        let step = eng
            .state
            .trace
            .push(RuleId::Om, node, MarkDomain::singleton(value), vec![]);
        eng.state.domains[cell] = MarkDomain::singleton(value);
        eng.state.attrs[cell] = Some(Attr { node, step });
    }
    eng.propagate_to_fixpoint()
        .unwrap_or_else(|_| unreachable!("total leaf marks always extend consistently"));
    let state = eng.into_state();
    assert!(
        state.is_fully_marked(),
        "leaf marks must determine every cell"
    );
    Ok(state)
}
