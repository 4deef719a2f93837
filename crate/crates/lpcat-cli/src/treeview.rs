//! Forcing-tree renderers: indented text, Graphviz DOT and JSON.
//!
//! Mark decorations follow the tree-diagram conventions: `(1)` accepted
//! (circle), `[0]` rejected (square), `<*>` accepted by default (triangle).

use crate::{parse_formula, parse_model, CliError, CmdOutput, CmdResult};
use lpcat_core::engine::{extend_marks, MarkState};
use lpcat_core::semantics::TruthValue;
use lpcat_core::tree::{build_tree, ForcingTree, NodeId, PositionTag};
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreeFormat {
    Ascii,
    Dot,
    Json,
}

fn mark_of(tree: &ForcingTree, marks: Option<&MarkState>, node: NodeId) -> Option<TruthValue> {
    marks.and_then(|m| m.node_domain(tree, node).as_singleton())
}

fn decoration(v: TruthValue) -> String {
    match v {
        TruthValue::One => "(1)".into(),
        TruthValue::Zero => "[0]".into(),
        TruthValue::Star => "<*>".into(),
    }
}

fn ascii_lines(
    tree: &ForcingTree,
    marks: Option<&MarkState>,
    node: NodeId,
    level: usize,
    unicode: bool,
    out: &mut String,
) {
    let n = tree.node(node);
    out.push_str(&"  ".repeat(level));
    if n.tag != PositionTag::Root {
        let tag = if unicode { n.tag.unicode() } else { n.tag.ascii() };
        out.push_str(tag);
        out.push(' ');
    }
    out.push_str(&tree.glyph(node, unicode));
    if let Some(v) = mark_of(tree, marks, node) {
        out.push(' ');
        out.push_str(&decoration(v));
    }
    out.push('\n');
    for &c in &n.children {
        ascii_lines(tree, marks, c, level + 1, unicode, out);
    }
}

fn dot_document(tree: &ForcingTree, marks: Option<&MarkState>, unicode: bool) -> String {
    let mut out = String::from("digraph forcing_tree {\n");
    for n in tree.nodes() {
        let label = tree.glyph(n.id, unicode);
        let attrs = match mark_of(tree, marks, n.id) {
            Some(TruthValue::One) => "shape=ellipse".to_string(),
            Some(TruthValue::Zero) => "shape=box".to_string(),
            Some(TruthValue::Star) => "shape=triangle".to_string(),
            None => "shape=ellipse, style=dashed".to_string(),
        };
        out.push_str(&format!("  n{} [label=\"{label}\", {attrs}];\n", n.id));
    }
    for n in tree.nodes() {
        for &c in &n.children {
            let tag = if unicode {
                tree.node(c).tag.unicode()
            } else {
                tree.node(c).tag.ascii()
            };
            out.push_str(&format!("  n{} -> n{} [label=\"{tag}\"];\n", n.id, c));
        }
    }
    out.push_str("}\n");
    out
}

/// `{nodes: [{id, glyph, tag, cell, children, mark?}], root}`. Glyphs and
/// tags use the ASCII spellings regardless of display flags.
pub fn tree_json(tree: &ForcingTree, marks: Option<&MarkState>) -> Value {
    let nodes: Vec<Value> = tree
        .nodes()
        .iter()
        .map(|n| {
            let mut node = json!({
                "id": n.id,
                "glyph": tree.glyph(n.id, false),
                "tag": n.tag.ascii(),
                "cell": n.cell,
                "children": n.children,
            });
            if let Some(v) = mark_of(tree, marks, n.id) {
                node.as_object_mut()
                    .expect("node object")
                    .insert("mark".into(), Value::String(v.symbol().into()));
            }
            node
        })
        .collect();
    json!({ "nodes": nodes, "root": tree.root() })
}

/// Assignment as a JSON object, `{"A": "*", "B": "0"}`.
pub fn model_json(model: &lpcat_core::semantics::Assignment) -> Value {
    Value::Object(
        model
            .iter()
            .map(|(name, v)| (name.to_string(), Value::String(v.symbol().into())))
            .collect(),
    )
}

/// `lpcat tree FORMULA` — render the forcing tree, decorated with marks when
/// a model is supplied.
pub fn cmd_tree(
    formula_text: &str,
    format: TreeFormat,
    model: Option<&str>,
    unicode: bool,
) -> CmdResult {
    let f = parse_formula(formula_text)?;
    let tree = build_tree(&f);
    let marks = match model {
        None => None,
        Some(text) => {
            let assignment = parse_model(text)?;
            let tree_atoms = f.atoms();
            for (name, _) in assignment.iter() {
                if !tree_atoms.iter().any(|a| a == name) {
                    return Err(CliError::usage(format!(
                        "model names atom '{name}' which does not occur in the formula"
                    )));
                }
            }
            let state = extend_marks(&tree, &assignment)
                .map_err(|e| CliError::usage(format!("{e}")))?;
            Some(state)
        }
    };
    let stdout = match format {
        TreeFormat::Ascii => {
            let mut out = String::new();
            ascii_lines(&tree, marks.as_ref(), tree.root(), 0, unicode, &mut out);
            out
        }
        TreeFormat::Dot => dot_document(&tree, marks.as_ref(), unicode),
        TreeFormat::Json => format!("{:#}\n", tree_json(&tree, marks.as_ref())),
    };
    Ok(CmdOutput {
        stdout,
        exit_code: 0,
    })
}
