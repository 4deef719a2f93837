//! Syntax of the paraconsistent calculi P1 and LPcAt.
//!
//! The language has named atoms, two negations (weak `-`/`¬` and strong `~`),
//! an incompatibility operator `#`/`⊥` that applies to atoms only, and the
//! binary connectives `&`, `|`, `->`, `<->`. The biconditional is definitional
//! sugar for `(X -> Y) & (Y -> X)`: structural equality, hashing and every
//! semantic operation treat it as that expansion.
//!
//! Concrete syntax (tightest first): prefix operators, `&`, `|`, `->`, `<->`.
//! `&` and `|` associate to the left, `->` and `<->` to the right. Unicode
//! aliases `¬ ∧ ∨ → ↔ ⊥` are accepted on input.

use std::fmt;
use std::hash::{Hash, Hasher};

/// A formula of LPcAt (P1 plus the incompatibility operator).
///
/// `Incompat` stores the atom name directly, so an incompatibility over a
/// compound formula is unrepresentable.
#[derive(Clone, Debug)]
pub enum Formula {
    /// An atomic proposition.
    Atom(String),
    /// Weak negation `-X` (questioning): classical on compounds, designates `*`.
    WeakNeg(Box<Formula>),
    /// Strong negation `~X`: rejects every designated value.
    StrongNeg(Box<Formula>),
    /// Incompatibility `#p`: the atom cannot be accepted by default.
    Incompat(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    /// Biconditional; kept as its own constructor for rendering fidelity,
    /// compiled to `(X -> Y) & (Y -> X)` everywhere else.
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn weak_neg(arg: Formula) -> Self {
        Formula::WeakNeg(Box::new(arg))
    }

    pub fn strong_neg(arg: Formula) -> Self {
        Formula::StrongNeg(Box::new(arg))
    }

    pub fn incompat(atom: impl Into<String>) -> Self {
        Formula::Incompat(atom.into())
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// True when some subformula is a biconditional.
    pub fn contains_iff(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Incompat(_) => false,
            Formula::WeakNeg(x) | Formula::StrongNeg(x) => x.contains_iff(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.contains_iff() || r.contains_iff()
            }
            Formula::Iff(_, _) => true,
        }
    }

    /// Rewrites every `X <-> Y` into `(X -> Y) & (Y -> X)`.
    pub fn expand_iff(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Incompat(_) => self.clone(),
            Formula::WeakNeg(x) => Formula::weak_neg(x.expand_iff()),
            Formula::StrongNeg(x) => Formula::strong_neg(x.expand_iff()),
            Formula::And(l, r) => Formula::and(l.expand_iff(), r.expand_iff()),
            Formula::Or(l, r) => Formula::or(l.expand_iff(), r.expand_iff()),
            Formula::Imp(l, r) => Formula::imp(l.expand_iff(), r.expand_iff()),
            Formula::Iff(l, r) => {
                let l = l.expand_iff();
                let r = r.expand_iff();
                Formula::and(Formula::imp(l.clone(), r.clone()), Formula::imp(r, l))
            }
        }
    }

    /// Complexity measure: 0 for atoms, 2 for `#p`, 1 + child otherwise
    /// (1 + max of the children for binary connectives). The biconditional is
    /// measured through its expansion, hence 2 + max.
    pub fn complexity(&self) -> u32 {
        match self {
            Formula::Atom(_) => 0,
            Formula::Incompat(_) => 2,
            Formula::WeakNeg(x) | Formula::StrongNeg(x) => 1 + x.complexity(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                1 + l.complexity().max(r.complexity())
            }
            Formula::Iff(l, r) => 2 + l.complexity().max(r.complexity()),
        }
    }

    /// Distinct atom names in first-occurrence order.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(f: &Formula, out: &mut Vec<String>) {
            match f {
                Formula::Atom(n) | Formula::Incompat(n) => {
                    if !out.iter().any(|m| m == n) {
                        out.push(n.clone());
                    }
                }
                Formula::WeakNeg(x) | Formula::StrongNeg(x) => walk(x, out),
                Formula::And(l, r)
                | Formula::Or(l, r)
                | Formula::Imp(l, r)
                | Formula::Iff(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Renders the formula, see [`render`].
    pub fn render(&self, style: RenderStyle) -> String {
        render(self, style)
    }
}

fn iff_expansion(l: &Formula, r: &Formula) -> Formula {
    Formula::and(
        Formula::imp(l.clone(), r.clone()),
        Formula::imp(r.clone(), l.clone()),
    )
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        use Formula::*;
        match (self, other) {
            (Iff(a, b), rhs) => iff_expansion(a, b) == *rhs,
            (lhs, Iff(a, b)) => *lhs == iff_expansion(a, b),
            (Atom(a), Atom(b)) => a == b,
            (Incompat(a), Incompat(b)) => a == b,
            (WeakNeg(a), WeakNeg(b)) => a == b,
            (StrongNeg(a), StrongNeg(b)) => a == b,
            (And(a, b), And(c, d)) => a == c && b == d,
            (Or(a, b), Or(c, d)) => a == c && b == d,
            (Imp(a, b), Imp(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        use Formula::*;
        match self {
            Atom(n) => {
                state.write_u8(0);
                n.hash(state);
            }
            WeakNeg(x) => {
                state.write_u8(1);
                x.hash(state);
            }
            StrongNeg(x) => {
                state.write_u8(2);
                x.hash(state);
            }
            Incompat(n) => {
                state.write_u8(3);
                n.hash(state);
            }
            And(l, r) => {
                state.write_u8(4);
                l.hash(state);
                r.hash(state);
            }
            Or(l, r) => {
                state.write_u8(5);
                l.hash(state);
                r.hash(state);
            }
            Imp(l, r) => {
                state.write_u8(6);
                l.hash(state);
                r.hash(state);
            }
            // Hash as the expansion so Hash agrees with Eq.
            Iff(l, r) => {
                state.write_u8(4);
                state.write_u8(6);
                l.hash(state);
                r.hash(state);
                state.write_u8(6);
                r.hash(state);
                l.hash(state);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, RenderStyle::Ascii))
    }
}

/// Output alphabet for [`render`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RenderStyle {
    /// `- ~ # & | -> <->`
    #[default]
    Ascii,
    /// `¬ ~ ⊥ ∧ ∨ → ↔`
    Unicode,
}

impl RenderStyle {
    fn weak(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "-",
            RenderStyle::Unicode => "¬",
        }
    }
    fn incompat(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "#",
            RenderStyle::Unicode => "⊥",
        }
    }
    fn and(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "&",
            RenderStyle::Unicode => "∧",
        }
    }
    fn or(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "|",
            RenderStyle::Unicode => "∨",
        }
    }
    fn imp(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "->",
            RenderStyle::Unicode => "→",
        }
    }
    fn iff(self) -> &'static str {
        match self {
            RenderStyle::Ascii => "<->",
            RenderStyle::Unicode => "↔",
        }
    }
}

const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_)
        | Formula::Incompat(_)
        | Formula::WeakNeg(_)
        | Formula::StrongNeg(_) => PREC_UNARY,
        Formula::And(_, _) => PREC_AND,
        Formula::Or(_, _) => PREC_OR,
        Formula::Imp(_, _) => PREC_IMP,
        Formula::Iff(_, _) => PREC_IFF,
    }
}

/// Pretty printer. Parentheses are emitted exactly where a subformula does not
/// bind strictly tighter than its context, so same-precedence nesting is shown
/// explicitly (`A -> (B -> C)`) and `parse(render(f)) == f` for both styles.
pub fn render(f: &Formula, style: RenderStyle) -> String {
    let mut out = String::new();
    write_formula(f, style, &mut out);
    out
}

fn write_formula(f: &Formula, style: RenderStyle, out: &mut String) {
    match f {
        Formula::Atom(n) => out.push_str(n),
        Formula::Incompat(n) => {
            out.push_str(style.incompat());
            out.push_str(n);
        }
        Formula::WeakNeg(x) => {
            out.push_str(style.weak());
            write_child(x, style, PREC_UNARY, out);
        }
        Formula::StrongNeg(x) => {
            out.push('~');
            write_child(x, style, PREC_UNARY, out);
        }
        Formula::And(l, r) => write_binary(l, r, style.and(), PREC_AND, style, out),
        Formula::Or(l, r) => write_binary(l, r, style.or(), PREC_OR, style, out),
        Formula::Imp(l, r) => write_binary(l, r, style.imp(), PREC_IMP, style, out),
        Formula::Iff(l, r) => write_binary(l, r, style.iff(), PREC_IFF, style, out),
    }
}

fn write_binary(
    l: &Formula,
    r: &Formula,
    op: &str,
    prec: u8,
    style: RenderStyle,
    out: &mut String,
) {
    write_child(l, style, prec, out);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    write_child(r, style, prec, out);
}

fn write_child(f: &Formula, style: RenderStyle, parent_prec: u8, out: &mut String) {
    let needs_parens = if parent_prec == PREC_UNARY {
        precedence(f) < PREC_UNARY
    } else {
        precedence(f) <= parent_prec
    };
    if needs_parens {
        out.push('(');
        write_formula(f, style, out);
        out.push(')');
    } else {
        write_formula(f, style, out);
    }
}

/// Parse failure, with a 0-based character position into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { position: usize, expected: String },
    /// `#` was applied to something other than an atom.
    IncompatOnCompound { position: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { position, expected } => {
                write!(f, "syntax error at {position}: expected {expected}")
            }
            ParseError::IncompatOnCompound { position } => {
                write!(
                    f,
                    "incompatibility applies to atoms only (at {position})"
                )
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Weak,
    Strong,
    Incompat,
    AndOp,
    OrOp,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "an atom",
            Tok::Weak => "'-'",
            Tok::Strong => "'~'",
            Tok::Incompat => "'#'",
            Tok::AndOp => "'&'",
            Tok::OrOp => "'|'",
            Tok::Arrow => "'->'",
            Tok::DoubleArrow => "'<->'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
        }
    }

    fn starts_formula(&self) -> bool {
        matches!(
            self,
            Tok::Ident(_) | Tok::Weak | Tok::Strong | Tok::Incompat | Tok::LParen
        )
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '~' => {
                toks.push((Tok::Strong, i));
                i += 1;
            }
            '#' | '⊥' => {
                toks.push((Tok::Incompat, i));
                i += 1;
            }
            '&' | '∧' => {
                toks.push((Tok::AndOp, i));
                i += 1;
            }
            '|' | '∨' => {
                toks.push((Tok::OrOp, i));
                i += 1;
            }
            '¬' => {
                toks.push((Tok::Weak, i));
                i += 1;
            }
            '→' => {
                toks.push((Tok::Arrow, i));
                i += 1;
            }
            '↔' => {
                toks.push((Tok::DoubleArrow, i));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    toks.push((Tok::Arrow, i));
                    i += 2;
                } else {
                    toks.push((Tok::Weak, i));
                    i += 1;
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') {
                    toks.push((Tok::DoubleArrow, i));
                    i += 3;
                } else {
                    return Err(ParseError::Syntax {
                        position: i,
                        expected: "'<->'".into(),
                    });
                }
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                let mut name = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    name.push(chars[i]);
                    i += 1;
                }
                toks.push((Tok::Ident(name), start));
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: i,
                    expected: "a formula token".into(),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.here(),
            expected: expected.into(),
        }
    }

    // iff := imp { "<->" imp }, folded to the right
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.imp()?];
        while self.peek() == Some(&Tok::DoubleArrow) {
            self.bump();
            parts.push(self.imp()?);
        }
        let mut f = parts.pop().expect("at least one part");
        while let Some(prev) = parts.pop() {
            f = Formula::iff(prev, f);
        }
        Ok(f)
    }

    // imp := or [ "->" imp ]
    fn imp(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let right = self.imp()?;
            Ok(Formula::imp(left, right))
        } else {
            Ok(left)
        }
    }

    // or := and { "|" and }, folded to the left
    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while self.peek() == Some(&Tok::OrOp) {
            self.bump();
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    // and := unary { "&" unary }, folded to the left
    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.peek() == Some(&Tok::AndOp) {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Weak) => {
                self.bump();
                Ok(Formula::weak_neg(self.unary()?))
            }
            Some(Tok::Strong) => {
                self.bump();
                Ok(Formula::strong_neg(self.unary()?))
            }
            Some(Tok::Incompat) => {
                self.bump();
                let position = self.here();
                match self.peek() {
                    Some(Tok::Ident(_)) => {
                        let Some(Tok::Ident(name)) = self.bump() else {
                            unreachable!()
                        };
                        Ok(Formula::incompat(name))
                    }
                    Some(t) if t.starts_formula() => {
                        Err(ParseError::IncompatOnCompound { position })
                    }
                    _ => Err(self.err("an atom after the incompatibility operator")),
                }
            }
            Some(Tok::Ident(_)) => {
                let Some(Tok::Ident(name)) = self.bump() else {
                    unreachable!()
                };
                Ok(Formula::Atom(name))
            }
            Some(Tok::LParen) => {
                self.bump();
                let f = self.formula()?;
                if self.peek() == Some(&Tok::RParen) {
                    self.bump();
                    Ok(f)
                } else {
                    Err(self.err("')'"))
                }
            }
            Some(t) => Err(self.err(format!("a formula, found {}", t.describe()))),
            None => Err(self.err("a formula")),
        }
    }
}

/// Parses the ASCII/Unicode concrete syntax into a [`Formula`].
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let end = text.chars().count();
    let mut p = Parser { toks, pos: 0, end };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.err("end of input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn parse_trivializing_conditional() {
        let f = parse("-A -> (A -> B)").unwrap();
        let want = Formula::imp(
            Formula::weak_neg(a("A")),
            Formula::imp(a("A"), a("B")),
        );
        assert_eq!(f, want);
    }

    #[test]
    fn parse_single_atom() {
        assert_eq!(parse("p").unwrap(), a("p"));
    }

    #[test]
    fn parse_rejects_incompat_on_compound() {
        match parse("#(A & B)") {
            Err(ParseError::IncompatOnCompound { position }) => assert_eq!(position, 1),
            other => panic!("expected IncompatOnCompound, got {other:?}"),
        }
        assert!(matches!(
            parse("#-A"),
            Err(ParseError::IncompatOnCompound { .. })
        ));
        assert!(matches!(
            parse("##A"),
            Err(ParseError::IncompatOnCompound { .. })
        ));
    }

    #[test]
    fn parse_reports_positions() {
        match parse("A & ) B") {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("A B").is_err());
    }

    #[test]
    fn parse_unicode_aliases() {
        assert_eq!(parse("¬A → (A → B)").unwrap(), parse("-A -> (A -> B)").unwrap());
        assert_eq!(parse("⊥p ∧ q ∨ r").unwrap(), parse("#p & q | r").unwrap());
        assert_eq!(parse("p ↔ q").unwrap(), parse("p <-> q").unwrap());
    }

    #[test]
    fn parse_precedence_and_associativity() {
        // & binds tighter than |, which binds tighter than ->
        assert_eq!(
            parse("a & b | c -> d").unwrap(),
            Formula::imp(
                Formula::or(Formula::and(a("a"), a("b")), a("c")),
                a("d")
            )
        );
        // -> and <-> associate to the right, & and | to the left
        assert_eq!(
            parse("a -> b -> c").unwrap(),
            Formula::imp(a("a"), Formula::imp(a("b"), a("c")))
        );
        assert_eq!(
            parse("a & b & c").unwrap(),
            Formula::and(Formula::and(a("a"), a("b")), a("c"))
        );
        assert_eq!(
            parse("a <-> b <-> c").unwrap(),
            Formula::iff(a("a"), Formula::iff(a("b"), a("c")))
        );
    }

    #[test]
    fn render_unicode_conditional() {
        let f = Formula::imp(
            Formula::weak_neg(a("A")),
            Formula::imp(a("A"), a("B")),
        );
        assert_eq!(render(&f, RenderStyle::Unicode), "¬A → (A → B)");
        assert_eq!(render(&f, RenderStyle::Ascii), "-A -> (A -> B)");
    }

    #[test]
    fn render_atom() {
        assert_eq!(render(&a("p"), RenderStyle::Ascii), "p");
    }

    #[test]
    fn render_incompat_conjunction() {
        let f = Formula::and(a("A"), Formula::incompat("A"));
        assert_eq!(render(&f, RenderStyle::Ascii), "A & #A");
    }

    #[test]
    fn render_nested_unary() {
        assert_eq!(
            render(&Formula::weak_neg(Formula::weak_neg(a("A"))), RenderStyle::Ascii),
            "--A"
        );
        assert_eq!(
            render(
                &Formula::weak_neg(Formula::and(a("A"), a("B"))),
                RenderStyle::Ascii
            ),
            "-(A & B)"
        );
        assert_eq!(
            render(&Formula::strong_neg(Formula::incompat("A")), RenderStyle::Ascii),
            "~#A"
        );
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(a("p").complexity(), 0);
        assert_eq!(Formula::incompat("p").complexity(), 2);
        // 1 + max(1 + 0, 1 + max(0, 0)) = 2
        let f = parse("-A -> (A -> B)").unwrap();
        assert_eq!(f.complexity(), 2);
        // biconditional measured through (X -> Y) & (Y -> X)
        assert_eq!(parse("p <-> q").unwrap().complexity(), 2);
        assert_eq!(
            parse("p <-> q").unwrap().complexity(),
            parse("(p -> q) & (q -> p)").unwrap().complexity()
        );
    }

    #[test]
    fn atoms_in_first_occurrence_order() {
        assert_eq!(parse("-A -> (A -> B)").unwrap().atoms(), ["A", "B"]);
        assert_eq!(parse("p").unwrap().atoms(), ["p"]);
        assert_eq!(
            parse("(A -> B) -> ((A -> -B) -> -A)").unwrap().atoms(),
            ["A", "B"]
        );
        assert_eq!(parse("#q & p & q").unwrap().atoms(), ["q", "p"]);
    }

    #[test]
    fn iff_equals_its_expansion() {
        let sugar = parse("p <-> q").unwrap();
        let expanded = parse("(p -> q) & (q -> p)").unwrap();
        assert_eq!(sugar, expanded);
        assert_eq!(expanded, sugar);

        // nested on one side
        let lhs = parse("a -> (p <-> q)").unwrap();
        let rhs = parse("a -> ((p -> q) & (q -> p))").unwrap();
        assert_eq!(lhs, rhs);

        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let h = |f: &Formula| {
            let mut s = DefaultHasher::new();
            f.hash(&mut s);
            s.finish()
        };
        assert_eq!(h(&sugar), h(&expanded));
    }
}
