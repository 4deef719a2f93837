//! The forcing tree of a formula.
//!
//! Every connective occurrence and every atom occurrence gets a node. A node
//! carries the positional tag that the marking rules address it by: `i→`/`d→`
//! for the sides of a conditional, `i∧`/`d∧`, `i∨`/`d∨` for conjunction and
//! disjunction, and `a~`/`a¬`/`a⊥` for the scope of the unary operators.
//!
//! Nodes whose subformulas are structurally equal share a *cell*: marks are
//! stored per cell, so mark iteration across occurrences of the same formula
//! is a structural fact of the tree rather than a runtime rule. An atom cell
//! may carry any of the three marks; a compound cell only `0` or `1`.
//!
//! Biconditionals are expanded to `(X -> Y) & (Y -> X)` before building.

use crate::formula::Formula;
use std::fmt;

pub type NodeId = usize;
pub type CellId = usize;

/// Position of a node relative to its parent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PositionTag {
    Root,
    ImpLeft,
    ImpRight,
    AndLeft,
    AndRight,
    OrLeft,
    OrRight,
    StrongScope,
    WeakScope,
    IncompatScope,
}

impl PositionTag {
    pub fn ascii(self) -> &'static str {
        match self {
            PositionTag::Root => "root",
            PositionTag::ImpLeft => "i->",
            PositionTag::ImpRight => "d->",
            PositionTag::AndLeft => "i&",
            PositionTag::AndRight => "d&",
            PositionTag::OrLeft => "i|",
            PositionTag::OrRight => "d|",
            PositionTag::StrongScope => "a~",
            PositionTag::WeakScope => "a-",
            PositionTag::IncompatScope => "a#",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            PositionTag::Root => "root",
            PositionTag::ImpLeft => "i→",
            PositionTag::ImpRight => "d→",
            PositionTag::AndLeft => "i∧",
            PositionTag::AndRight => "d∧",
            PositionTag::OrLeft => "i∨",
            PositionTag::OrRight => "d∨",
            PositionTag::StrongScope => "a~",
            PositionTag::WeakScope => "a¬",
            PositionTag::IncompatScope => "a⊥",
        }
    }
}

impl fmt::Display for PositionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.unicode())
    }
}

/// The operator at a node, or `Leaf` for an atom occurrence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Imp,
    And,
    Or,
    StrongNeg,
    WeakNeg,
    Incompat,
    Leaf,
}

/// One occurrence node of the tree.
#[derive(Clone, Debug)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub tag: PositionTag,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Shared-cell id; equal across nodes with structurally equal subformulas.
    pub cell: CellId,
}

/// Per-cell data: the subformula, its occurrences and its depth measure.
#[derive(Clone, Debug)]
pub struct CellInfo {
    pub formula: Formula,
    /// Occurrence node ids, ascending.
    pub nodes: Vec<NodeId>,
    /// Atom name when the cell's formula is atomic.
    pub atom: Option<String>,
    /// Depth of the cell's subformula (see [`depth`]).
    pub depth: u32,
}

impl CellInfo {
    pub fn is_atom(&self) -> bool {
        self.atom.is_some()
    }

    pub fn first_node(&self) -> NodeId {
        self.nodes[0]
    }
}

/// The forcing tree of a formula.
#[derive(Clone, Debug)]
pub struct ForcingTree {
    nodes: Vec<Node>,
    cells: Vec<CellInfo>,
    root: NodeId,
}

impl ForcingTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn cell(&self, id: CellId) -> &CellInfo {
        &self.cells[id]
    }

    pub fn cells(&self) -> &[CellInfo] {
        &self.cells
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// The (biconditional-free) formula the tree was built from.
    pub fn formula(&self) -> &Formula {
        &self.cells[self.nodes[self.root].cell].formula
    }

    /// Subformula rooted at a node.
    pub fn node_formula(&self, id: NodeId) -> &Formula {
        &self.cells[self.nodes[id].cell].formula
    }

    /// Cells holding atoms, in first-occurrence order.
    pub fn atom_cells(&self) -> impl Iterator<Item = (CellId, &str)> {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(id, c)| c.atom.as_deref().map(|n| (id, n)))
    }

    /// Display glyph of a node: the operator symbol or the atom name.
    pub fn glyph(&self, id: NodeId, unicode: bool) -> String {
        match self.nodes[id].kind {
            NodeKind::Imp => if unicode { "→" } else { "->" }.to_string(),
            NodeKind::And => if unicode { "∧" } else { "&" }.to_string(),
            NodeKind::Or => if unicode { "∨" } else { "|" }.to_string(),
            NodeKind::StrongNeg => "~".to_string(),
            NodeKind::WeakNeg => if unicode { "¬" } else { "-" }.to_string(),
            NodeKind::Incompat => if unicode { "⊥" } else { "#" }.to_string(),
            NodeKind::Leaf => match self.node_formula(id) {
                Formula::Atom(n) => n.clone(),
                other => unreachable!("leaf node holds non-atom {other:?}"),
            },
        }
    }
}

struct Builder {
    nodes: Vec<Node>,
    cells: Vec<CellInfo>,
}

impl Builder {
    // trees stay desk-sized, so a structural-equality scan beats hashing
    // every subformula
    fn cell_for(&mut self, f: &Formula) -> CellId {
        if let Some(id) = self.cells.iter().position(|c| &c.formula == f) {
            return id;
        }
        let id = self.cells.len();
        self.cells.push(CellInfo {
            formula: f.clone(),
            nodes: Vec::new(),
            atom: match f {
                Formula::Atom(n) => Some(n.clone()),
                _ => None,
            },
            depth: depth(f),
        });
        id
    }

    fn build(&mut self, f: &Formula, tag: PositionTag, parent: Option<NodeId>) -> NodeId {
        let id = self.nodes.len();
        let cell = self.cell_for(f);
        let kind = match f {
            Formula::Atom(_) => NodeKind::Leaf,
            Formula::WeakNeg(_) => NodeKind::WeakNeg,
            Formula::StrongNeg(_) => NodeKind::StrongNeg,
            Formula::Incompat(_) => NodeKind::Incompat,
            Formula::And(_, _) => NodeKind::And,
            Formula::Or(_, _) => NodeKind::Or,
            Formula::Imp(_, _) => NodeKind::Imp,
            Formula::Iff(_, _) => unreachable!("biconditional survived expansion"),
        };
        self.nodes.push(Node {
            id,
            kind,
            tag,
            parent,
            children: Vec::new(),
            cell,
        });
        self.cells[cell].nodes.push(id);

        let children = match f {
            Formula::Atom(_) => vec![],
            Formula::WeakNeg(x) => vec![self.build(x, PositionTag::WeakScope, Some(id))],
            Formula::StrongNeg(x) => vec![self.build(x, PositionTag::StrongScope, Some(id))],
            Formula::Incompat(n) => {
                let atom = Formula::Atom(n.clone());
                vec![self.build(&atom, PositionTag::IncompatScope, Some(id))]
            }
            Formula::And(l, r) => vec![
                self.build(l, PositionTag::AndLeft, Some(id)),
                self.build(r, PositionTag::AndRight, Some(id)),
            ],
            Formula::Or(l, r) => vec![
                self.build(l, PositionTag::OrLeft, Some(id)),
                self.build(r, PositionTag::OrRight, Some(id)),
            ],
            Formula::Imp(l, r) => vec![
                self.build(l, PositionTag::ImpLeft, Some(id)),
                self.build(r, PositionTag::ImpRight, Some(id)),
            ],
            Formula::Iff(_, _) => unreachable!(),
        };
        self.nodes[id].children = children;
        id
    }
}

/// Builds the forcing tree of `f`, expanding biconditionals first.
///
/// Node ids are assigned in preorder, the root is node 0. Cell ids follow
/// first encounter, so the atom cells come out in first-occurrence order.
pub fn build_tree(f: &Formula) -> ForcingTree {
    let expanded;
    let f = if f.contains_iff() {
        expanded = f.expand_iff();
        &expanded
    } else {
        f
    };
    let mut b = Builder {
        nodes: Vec::new(),
        cells: Vec::new(),
    };
    let root = b.build(f, PositionTag::Root, None);
    ForcingTree {
        nodes: b.nodes,
        cells: b.cells,
        root,
    }
}

/// Depth measure of a formula's tree: 0 for atoms, 2 for `#p`, 1 + child for
/// the other unary operators, 1 + max of the children for binary connectives.
/// Biconditionals measure through their expansion (2 + max).
pub fn depth(f: &Formula) -> u32 {
    match f {
        Formula::Atom(_) => 0,
        Formula::Incompat(_) => 2,
        Formula::WeakNeg(x) | Formula::StrongNeg(x) => 1 + depth(x),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
            1 + depth(l).max(depth(r))
        }
        Formula::Iff(l, r) => 2 + depth(l).max(depth(r)),
    }
}

/// An argument needs at least one premise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptyPremises;

impl fmt::Display for EmptyPremises {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("argument has no premises")
    }
}

impl std::error::Error for EmptyPremises {}

/// `(X1 & (X2 & ...)) -> Y`, the formula whose tree analyzes the argument
/// "from X1, ..., Xn infer Y". The premise conjunction associates to the
/// right.
pub fn argument_formula(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Formula, EmptyPremises> {
    let mut iter = premises.iter().rev();
    let mut conj = iter.next().ok_or(EmptyPremises)?.clone();
    for p in iter {
        conj = Formula::and(p.clone(), conj);
    }
    Ok(Formula::imp(conj, conclusion.clone()))
}

/// Forcing tree of the argument formula, see [`argument_formula`].
pub fn argument_tree(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<ForcingTree, EmptyPremises> {
    Ok(build_tree(&argument_formula(premises, conclusion)?))
}
