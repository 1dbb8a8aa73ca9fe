//! The structure-file format.
//!
//! ```text
//! set X = { e, a }
//! rel m : X * X -> X {
//!   (e, e) -> e
//!   (e, a) -> a
//! }
//! frob Z2 { carrier = X  mult = m }
//! ```
//!
//! `#` starts a comment running to the end of the line. Whitespace,
//! including newlines, only separates tokens, and `,` / `;` between list
//! items are optional. `pt` is the empty product.

use std::fmt;

mod lexer;
mod parser;
mod print;

pub use parser::parse;
pub use print::print;

/// A 1-based line and column (in characters).
///
/// Locations never take part in equality, so a reparsed file compares equal
/// to the file it was printed from.
#[derive(Debug, Clone, Copy, Default, Eq)]
pub struct Loc {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Loc {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn name(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub loc: Loc,
    pub message: String,
}

impl Diagnostic {
    pub fn error(loc: Loc, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            loc,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.loc, self.severity.name(), self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// A word together with where it was written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub loc: Loc,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            loc: Loc::default(),
        }
    }
}

/// One side of a table entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Label(Name),
    /// `(a, b)`; `()` is the point.
    Tuple(Vec<Name>),
    /// `{a, b}`
    Set(Vec<Name>),
}

impl Term {
    pub fn loc(&self, fallback: Loc) -> Loc {
        match self {
            Term::Label(n) => n.loc,
            Term::Tuple(v) | Term::Set(v) => v.first().map_or(fallback, |n| n.loc),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub from: Term,
    pub to: Term,
    pub loc: Loc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Frob,
    HStar,
    Groupoid,
    Sgpd,
    Monoid,
    Weak,
    WeakStar,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldShape {
    /// `key = word`
    Word,
    /// `key { entries }`
    Table,
}

/// A field a block accepts: key, shape, and whether it may be omitted.
pub type FieldRule = (&'static str, FieldShape, bool);

impl BlockKind {
    pub const ALL: [BlockKind; 8] = [
        BlockKind::Frob,
        BlockKind::HStar,
        BlockKind::Groupoid,
        BlockKind::Sgpd,
        BlockKind::Monoid,
        BlockKind::Weak,
        BlockKind::WeakStar,
        BlockKind::Cyclic,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            BlockKind::Frob => "frob",
            BlockKind::HStar => "hstar",
            BlockKind::Groupoid => "groupoid",
            BlockKind::Sgpd => "sgpd",
            BlockKind::Monoid => "monoid",
            BlockKind::Weak => "weak",
            BlockKind::WeakStar => "weakstar",
            BlockKind::Cyclic => "cyclic",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == word)
    }

    /// Accepted fields in canonical order.
    pub fn fields(self) -> &'static [FieldRule] {
        use FieldShape::{Table, Word};
        match self {
            BlockKind::Frob => &[("carrier", Word, false), ("mult", Word, false)],
            BlockKind::HStar => &[("carrier", Word, false), ("mult", Word, false), ("star", Table, true)],
            BlockKind::Groupoid => &[
                ("objects", Word, false),
                ("arrows", Word, false),
                ("s", Table, false),
                ("t", Table, false),
                ("unit", Table, false),
                ("inv", Table, false),
                ("comp", Table, false),
            ],
            BlockKind::Sgpd => &[
                ("objects", Word, false),
                ("arrows", Word, false),
                ("s", Table, false),
                ("t", Table, false),
                ("comp", Table, false),
            ],
            BlockKind::Monoid => &[("carrier", Word, false), ("one", Word, false), ("op", Table, false)],
            BlockKind::Weak => &[("carrier", Word, false), ("L1", Word, false), ("L3", Word, false)],
            BlockKind::WeakStar => &[("carrier", Word, false), ("psi", Word, false), ("L3", Word, false)],
            BlockKind::Cyclic => &[("carrier", Word, false), ("psi", Word, false), ("L", Word, false)],
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Word(Name),
    Table(Vec<Entry>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    pub key: Name,
    pub value: FieldValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub name: Name,
    /// In canonical order, each key at most once.
    pub fields: Vec<Field>,
    pub loc: Loc,
}

impl Block {
    pub fn field(&self, key: &str) -> Option<&FieldValue> {
        self.fields.iter().find(|f| f.key.text == key).map(|f| &f.value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Set {
        name: Name,
        labels: Vec<Name>,
    },
    /// Source and target are products of declared sets; empty is `pt`.
    Rel {
        name: Name,
        source: Vec<Name>,
        target: Vec<Name>,
        entries: Vec<Entry>,
    },
    Subset {
        name: Name,
        of: Name,
        labels: Vec<Name>,
    },
    Block(Block),
}

impl Decl {
    pub fn name(&self) -> &Name {
        match self {
            Decl::Set { name, .. } | Decl::Rel { name, .. } | Decl::Subset { name, .. } => name,
            Decl::Block(b) => &b.name,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureFile {
    pub decls: Vec<Decl>,
}

impl StructureFile {
    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Block(b) => Some(b),
            _ => None,
        })
    }
}

/// Characters allowed in names and labels besides alphanumerics.
pub(crate) fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '\'')
}
