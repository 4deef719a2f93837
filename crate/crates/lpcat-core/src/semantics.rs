//! Trivalent truth-table semantics for P1/LPcAt.
//!
//! Truth values are `1`, `*` and `0`; `1` and `*` are designated. `*` reads
//! "accepted by default" and only atoms ever take it: every compound evaluates
//! to `0` or `1`.
//!
//! The connective tables, by rows `1, *, 0`:
//!
//! ```text
//!  ->  1 * 0     &  1 * 0     |  1 * 0        -  ~  #     <->  1 * 0
//!  1   1 1 0     1  1 1 0     1  1 1 1     1  0  0  1      1   1 1 0
//!  *   1 1 0     *  1 1 0     *  1 1 1     *  1  0  0      *   1 1 0
//!  0   1 1 1     0  0 0 0     0  1 1 0     0  1  1  1      0   0 0 1
//! ```
//!
//! A formula is T-valid when no assignment evaluates it to `0`.
//! [`t_validity`] decides that by exhaustive enumeration; it is the
//! independent reference the forcing engine is checked against.

use crate::formula::Formula;
use std::fmt;

/// One of the three marks `0`, `*`, `1`. Everything other than `0` is
/// designated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TruthValue {
    Zero,
    Star,
    One,
}

impl TruthValue {
    /// Row/column order used by the truth tables: `1, *, 0`.
    pub const TABLE_ORDER: [TruthValue; 3] = [TruthValue::One, TruthValue::Star, TruthValue::Zero];

    pub fn is_designated(self) -> bool {
        !matches!(self, TruthValue::Zero)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TruthValue::Zero => "0",
            TruthValue::Star => "*",
            TruthValue::One => "1",
        }
    }

    pub fn from_symbol(s: &str) -> Option<TruthValue> {
        match s {
            "0" => Some(TruthValue::Zero),
            "*" => Some(TruthValue::Star),
            "1" => Some(TruthValue::One),
            _ => None,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A total map from atom names to truth values, kept in insertion order.
///
/// Equality ignores entry order. Display prints `A=* B=0`.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    entries: Vec<(String, TruthValue)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, TruthValue)>,
        S: AsRef<str> + Into<String>,
    {
        let mut a = Assignment::new();
        for (name, v) in pairs {
            a.set(name, v);
        }
        a
    }

    /// Inserts or replaces the value of `name`.
    pub fn set(&mut self, name: impl AsRef<str> + Into<String>, value: TruthValue) {
        match self
            .entries
            .iter_mut()
            .find(|(n, _)| n.as_str() == name.as_ref())
        {
            Some(slot) => slot.1 = value,
            None => self.entries.push((name.into(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<TruthValue> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn sorted(&self) -> Vec<(&str, TruthValue)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }
}

impl PartialEq for Assignment {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for Assignment {}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={v}")?;
        }
        Ok(())
    }
}

/// The assignment does not cover an atom of the formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingAtom(pub String);

impl fmt::Display for MissingAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "assignment does not cover atom '{}'", self.0)
    }
}

impl std::error::Error for MissingAtom {}

fn truth(b: bool) -> TruthValue {
    if b {
        TruthValue::One
    } else {
        TruthValue::Zero
    }
}

/// Extends an assignment over atoms to the value of a formula.
///
/// Compounds follow the module-level tables; in particular every compound
/// value is `0` or `1`, never `*`.
pub fn eval(f: &Formula, v: &Assignment) -> Result<TruthValue, MissingAtom> {
    use TruthValue::*;
    Ok(match f {
        Formula::Atom(n) => v.get(n).ok_or_else(|| MissingAtom(n.clone()))?,
        Formula::WeakNeg(x) => match eval(x, v)? {
            One => Zero,
            Star | Zero => One,
        },
        Formula::StrongNeg(x) => match eval(x, v)? {
            One | Star => Zero,
            Zero => One,
        },
        Formula::Incompat(n) => match v.get(n).ok_or_else(|| MissingAtom(n.clone()))? {
            Star => Zero,
            One | Zero => One,
        },
        Formula::And(l, r) => truth(eval(l, v)?.is_designated() && eval(r, v)?.is_designated()),
        Formula::Or(l, r) => truth(eval(l, v)?.is_designated() || eval(r, v)?.is_designated()),
        Formula::Imp(l, r) => truth(!(eval(l, v)?.is_designated() && eval(r, v)? == Zero)),
        Formula::Iff(l, r) => {
            let a = eval(l, v)?;
            let b = eval(r, v)?;
            let fwd = !(a.is_designated() && b == Zero);
            let bwd = !(b.is_designated() && a == Zero);
            truth(fwd && bwd)
        }
    })
}

/// Streams all assignments over `atoms` in table order: the first atom is the
/// most significant digit, values cycling `1, *, 0`.
pub fn assignments(atoms: &[String]) -> impl Iterator<Item = Assignment> + '_ {
    let total = 3usize.pow(atoms.len() as u32);
    (0..total).map(move |row| {
        let mut rest = row;
        let mut a = Assignment::new();
        for (i, name) in atoms.iter().enumerate() {
            let radix = 3usize.pow((atoms.len() - 1 - i) as u32);
            let digit = (rest / radix) % 3;
            rest %= radix;
            a.set(name.clone(), TruthValue::TABLE_ORDER[digit]);
        }
        a
    })
}

/// The full trivalent table of `f`: one row per assignment, `3^n` rows in
/// table order.
pub fn truth_table(f: &Formula) -> Vec<(Assignment, TruthValue)> {
    let atoms = f.atoms();
    assignments(&atoms)
        .map(|a| {
            let value = eval(f, &a).expect("assignment is total by construction");
            (a, value)
        })
        .collect()
}

/// Outcome of the truth-table decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableVerdict {
    TValid,
    /// The first assignment in table order that evaluates the formula to `0`.
    TInvalid(Assignment),
}

impl TableVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TableVerdict::TValid)
    }

    pub fn countermodel(&self) -> Option<&Assignment> {
        match self {
            TableVerdict::TValid => None,
            TableVerdict::TInvalid(a) => Some(a),
        }
    }
}

/// Refused to enumerate: the formula has more atoms than the cap allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomLimitExceeded {
    pub atoms: usize,
    pub limit: usize,
}

impl fmt::Display for AtomLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "formula has {} atoms; the truth-table oracle is capped at {} (override to lift)",
            self.atoms, self.limit
        )
    }
}

impl std::error::Error for AtomLimitExceeded {}

/// Default cap on the oracle's enumeration (3^12 rows).
pub const DEFAULT_ATOM_LIMIT: usize = 12;

/// Decides T-validity by exhausting all assignments, up to
/// [`DEFAULT_ATOM_LIMIT`] atoms.
pub fn t_validity(f: &Formula) -> Result<TableVerdict, AtomLimitExceeded> {
    t_validity_limited(f, DEFAULT_ATOM_LIMIT)
}

/// [`t_validity`] with an explicit atom cap.
pub fn t_validity_limited(
    f: &Formula,
    max_atoms: usize,
) -> Result<TableVerdict, AtomLimitExceeded> {
    let atoms = f.atoms();
    if atoms.len() > max_atoms {
        return Err(AtomLimitExceeded {
            atoms: atoms.len(),
            limit: max_atoms,
        });
    }
    // one assignment, stepped through the rows in place
    let mut row = Assignment::from_pairs(atoms.iter().map(|a| (a.clone(), TruthValue::One)));
    let mut digits = vec![0usize; atoms.len()];
    loop {
        if eval(f, &row).expect("assignment is total by construction") == TruthValue::Zero {
            return Ok(TableVerdict::TInvalid(row));
        }
        // advance the odometer; the last atom cycles fastest
        let mut i = atoms.len();
        loop {
            if i == 0 {
                return Ok(TableVerdict::TValid);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < 3 {
                row.set(atoms[i].as_str(), TruthValue::TABLE_ORDER[digits[i]]);
                break;
            }
            digits[i] = 0;
            row.set(atoms[i].as_str(), TruthValue::TABLE_ORDER[0]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use TruthValue::*;

    fn assign(pairs: &[(&str, TruthValue)]) -> Assignment {
        Assignment::from_pairs(pairs.iter().map(|(n, v)| (*n, *v)))
    }

    fn ev(text: &str, pairs: &[(&str, TruthValue)]) -> TruthValue {
        eval(&parse(text).unwrap(), &assign(pairs)).unwrap()
    }

    #[test]
    fn eval_connective_cells() {
        assert_eq!(ev("-A", &[("A", Star)]), One);
        assert_eq!(ev("A -> B", &[("A", Star), ("B", Zero)]), Zero);
        assert_eq!(ev("#A", &[("A", Star)]), Zero);
        assert_eq!(ev("A", &[("A", One)]), One);
    }

    #[test]
    fn eval_reports_missing_atoms() {
        let f = parse("A & B").unwrap();
        assert_eq!(
            eval(&f, &assign(&[("A", One)])),
            Err(MissingAtom("B".into()))
        );
    }

    #[test]
    fn weak_negation_table() {
        let rows = truth_table(&parse("-p").unwrap());
        let values: Vec<TruthValue> = rows.iter().map(|(_, v)| *v).collect();
        assert_eq!(values, [Zero, One, One]);
    }

    #[test]
    fn identity_table() {
        let rows = truth_table(&parse("p").unwrap());
        let values: Vec<TruthValue> = rows.iter().map(|(_, v)| *v).collect();
        assert_eq!(values, [One, Star, Zero]);
    }

    #[test]
    fn biconditional_table_row_zero_star() {
        let rows = truth_table(&parse("p <-> q").unwrap());
        assert_eq!(rows.len(), 9);
        // rows: (1,1),(1,*),(1,0),(*,1),(*,*),(*,0),(0,1),(0,*),(0,0)
        let (a, v) = &rows[7];
        assert_eq!(a.get("p"), Some(Zero));
        assert_eq!(a.get("q"), Some(Star));
        assert_eq!(*v, Zero);
        assert_eq!(rows[8].1, One);
    }

    #[test]
    fn excluded_middle_is_valid() {
        assert_eq!(
            t_validity(&parse("A | -A").unwrap()).unwrap(),
            TableVerdict::TValid
        );
    }

    #[test]
    fn weak_negation_does_not_trivialize() {
        let verdict = t_validity(&parse("-A -> (A -> B)").unwrap()).unwrap();
        assert_eq!(
            verdict,
            TableVerdict::TInvalid(assign(&[("A", Star), ("B", Zero)]))
        );
    }

    #[test]
    fn incompatibility_does_not_transmit() {
        let verdict = t_validity(&parse("((A & #A) & (A -> B)) -> #B").unwrap()).unwrap();
        assert_eq!(
            verdict,
            TableVerdict::TInvalid(assign(&[("A", One), ("B", Star)]))
        );
    }

    #[test]
    fn oracle_refuses_oversized_formulas() {
        let text = (0..13)
            .map(|i| format!("a{i}"))
            .collect::<Vec<_>>()
            .join(" & ");
        let f = parse(&text).unwrap();
        assert!(t_validity(&f).is_err());
        assert!(t_validity_limited(&f, 13).is_ok());
    }

    #[test]
    fn strong_negation_trivializes() {
        assert_eq!(
            t_validity(&parse("A -> (~A -> B)").unwrap()).unwrap(),
            TableVerdict::TValid
        );
    }

    #[test]
    fn assignment_display_and_eq() {
        let a = assign(&[("A", Star), ("B", Zero)]);
        assert_eq!(a.to_string(), "A=* B=0");
        let b = assign(&[("B", Zero), ("A", Star)]);
        assert_eq!(a, b);
    }
}
