//! Justification traces.
//!
//! Every mark event appends one step. [`format_trace`] renders the steps in
//! the justification-table style `<n>. <rule> en <premises>`, grouping
//! consecutive steps that share a rule application, e.g. `2, 3. R→ en 1`.

use super::domain::MarkDomain;
use super::rules::RuleId;
use crate::tree::NodeId;
use std::fmt;

/// One mark event.
#[derive(Clone, Debug)]
pub struct TraceStep {
    /// 1-based step number; consecutive within a trace.
    pub step: u32,
    pub rule: RuleId,
    /// The occurrence node the mark lands on.
    pub node: NodeId,
    /// Resulting candidate set. On the step that exposes a double mark this
    /// is the conflicting demand rather than the (empty) intersection.
    pub domain: MarkDomain,
    /// Steps cited as premises.
    pub premises: Vec<u32>,
}

/// Append-only list of steps.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }

    pub(crate) fn push(
        &mut self,
        rule: RuleId,
        node: NodeId,
        domain: MarkDomain,
        premises: Vec<u32>,
    ) -> u32 {
        let step = self.steps.len() as u32 + 1;
        self.steps.push(TraceStep {
            step,
            rule,
            node,
            domain,
            premises,
        });
        step
    }

    /// Drops the steps of an abandoned exploration; only used before a trace
    /// is handed out.
    pub(crate) fn truncate(&mut self, len: usize) {
        self.steps.truncate(len);
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_trace(self))
    }
}

fn premise_list(premises: &[u32]) -> String {
    match premises {
        [] => String::new(),
        [p] => format!(" en {p}"),
        [init @ .., last] => {
            let init = init
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            format!(" en {init} y {last}")
        }
    }
}

/// Renders a trace, one justification line per rule application.
pub fn format_trace(trace: &Trace) -> String {
    let mut lines = Vec::new();
    let steps = trace.steps();
    let mut i = 0;
    while i < steps.len() {
        let mut j = i + 1;
        while j < steps.len()
            && steps[j].rule == steps[i].rule
            && steps[j].premises == steps[i].premises
        {
            j += 1;
        }
        let numbers = steps[i..j]
            .iter()
            .map(|s| s.step.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        lines.push(format!(
            "{numbers}. {}{}",
            steps[i].rule,
            premise_list(&steps[i].premises)
        ));
        i = j;
    }
    lines.join("\n")
}
