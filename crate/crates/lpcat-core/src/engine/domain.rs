//! Candidate mark sets.

use crate::semantics::TruthValue;
use std::fmt;

/// A non-empty subset of a cell's allowed marks, as a 3-bit set.
///
/// A singleton means the node *is* marked with that value; `{1,*}` on an atom
/// encodes "not rejected", `{0,*}` "not accepted". An empty domain is a double
/// mark, i.e. a contradiction. Compound cells never contain `*`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct MarkDomain(u8);

const BIT_ZERO: u8 = 0b001;
const BIT_STAR: u8 = 0b010;
const BIT_ONE: u8 = 0b100;

fn bit(v: TruthValue) -> u8 {
    match v {
        TruthValue::Zero => BIT_ZERO,
        TruthValue::Star => BIT_STAR,
        TruthValue::One => BIT_ONE,
    }
}

impl MarkDomain {
    pub const EMPTY: MarkDomain = MarkDomain(0);
    /// All three marks; the allowed set of an atom cell.
    pub const ATOM_ALL: MarkDomain = MarkDomain(BIT_ZERO | BIT_STAR | BIT_ONE);
    /// `{0, 1}`; the allowed set of a compound cell.
    pub const COMPOUND_ALL: MarkDomain = MarkDomain(BIT_ZERO | BIT_ONE);

    pub fn singleton(v: TruthValue) -> MarkDomain {
        MarkDomain(bit(v))
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.0 & bit(v) != 0
    }

    pub fn intersect(self, other: MarkDomain) -> MarkDomain {
        MarkDomain(self.0 & other.0)
    }

    pub fn insert(&mut self, v: TruthValue) {
        self.0 |= bit(v);
    }

    pub fn remove(self, v: TruthValue) -> MarkDomain {
        MarkDomain(self.0 & !bit(v))
    }

    pub fn difference(self, other: MarkDomain) -> MarkDomain {
        MarkDomain(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn as_singleton(self) -> Option<TruthValue> {
        match self.0 {
            BIT_ZERO => Some(TruthValue::Zero),
            BIT_STAR => Some(TruthValue::Star),
            BIT_ONE => Some(TruthValue::One),
            _ => None,
        }
    }

    /// Member values in the order `0, *, 1` (also the branching order).
    pub fn values(self) -> impl Iterator<Item = TruthValue> {
        [TruthValue::Zero, TruthValue::Star, TruthValue::One]
            .into_iter()
            .filter(move |&v| self.contains(v))
    }

    /// True when no value outside `other` is present.
    pub fn subset_of(self, other: MarkDomain) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Debug for MarkDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MarkDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.values().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
