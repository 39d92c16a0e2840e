//! The `.nat` structure format.
//!
//! A document is a sequence of blocks. Each block opens with
//! `@<kind> <name>`, followed by `order <n>`, optional `labels ...`,
//! optional references (`monoid`, `dom`, `cod`) and one or more named
//! tables. Table rows are whitespace-separated 0-based indices, one row per
//! left operand; `act:` rows are indexed by monoid elements. A `#` starts a
//! comment that runs to the end of the line.
//!
//! ```text
//! @monoid M2
//! order 2
//! table:
//! 0 0
//! 0 1
//! ```
//!
//! References either name an earlier block of the same document or use
//! `file.nat:Name`, resolved relative to the referring file. Parsing here is
//! purely syntactic; [`Workspace`] validates and builds the structures.

mod load;

use std::fmt;

use thiserror::Error;

use crate::andre::{AndreError, MultiNearRing};
use crate::group::{FiniteAbelianGroup, GroupError};
use crate::module::{MModule, ModuleError, ModuleMorphism};
use crate::monoid::{FiniteMonoid, MonoidError};
use crate::nearring::{NearRing, NearRingError};
use crate::ElementIndex;

pub use load::{LoadedFile, Structure, Workspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unresolved reference {0}")]
    UnresolvedReference(String),
    #[error("block {block}: {source}")]
    Validation {
        block: String,
        source: ValidationError,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// Why a syntactically correct block failed to validate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    NearRing(#[from] NearRingError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Andre(#[from] AndreError),
    #[error("{0}")]
    Shape(String),
}

fn syntax(line: usize, message: impl Into<String>) -> NatError {
    NatError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Monoid,
    Group,
    NearRing,
    Module,
    MultiNearRing,
    Morphism,
}

impl BlockKind {
    pub const ALL: [BlockKind; 6] = [
        BlockKind::Monoid,
        BlockKind::Group,
        BlockKind::NearRing,
        BlockKind::Module,
        BlockKind::MultiNearRing,
        BlockKind::Morphism,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            BlockKind::Monoid => "monoid",
            BlockKind::Group => "group",
            BlockKind::NearRing => "nearring",
            BlockKind::Module => "module",
            BlockKind::MultiNearRing => "multinearring",
            BlockKind::Morphism => "morphism",
        }
    }

    fn parse(word: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == word)
    }

    /// Reference headers and tables a block of this kind must carry, in
    /// canonical order.
    fn shape(self) -> (&'static [RefKey], &'static [TableName]) {
        use RefKey::*;
        use TableName::*;
        match self {
            BlockKind::Monoid => (&[], &[Table]),
            BlockKind::Group => (&[], &[Add]),
            BlockKind::NearRing => (&[MonoidRef], &[Add]),
            BlockKind::Module => (&[MonoidRef], &[Add, Act]),
            BlockKind::MultiNearRing => (&[MonoidRef], &[Adds]),
            BlockKind::Morphism => (&[Dom, Cod], &[Map]),
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RefKey {
    MonoidRef,
    Dom,
    Cod,
}

impl RefKey {
    fn keyword(self) -> &'static str {
        match self {
            RefKey::MonoidRef => "monoid",
            RefKey::Dom => "dom",
            RefKey::Cod => "cod",
        }
    }

    fn parse(word: &str) -> Option<Self> {
        [RefKey::MonoidRef, RefKey::Dom, RefKey::Cod]
            .into_iter()
            .find(|k| k.keyword() == word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableName {
    Table,
    Add,
    Act,
    Map,
    Adds,
}

impl TableName {
    fn keyword(self) -> &'static str {
        match self {
            TableName::Table => "table",
            TableName::Add => "add",
            TableName::Act => "act",
            TableName::Map => "map",
            TableName::Adds => "adds",
        }
    }
}

/// A named table. For `adds k:` the rows of all `k` tables are stored
/// consecutively and `count` is `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTable {
    pub name: TableName,
    pub count: Option<usize>,
    pub rows: Vec<Vec<ElementIndex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatBlock {
    pub kind: BlockKind,
    pub name: String,
    pub order: usize,
    pub labels: Option<Vec<String>>,
    pub refs: Vec<(RefKey, String)>,
    pub tables: Vec<NatTable>,
    /// Line of the `@` header, 0 for blocks built in memory.
    pub line: usize,
}

impl NatBlock {
    pub fn reference(&self, key: RefKey) -> Option<&str> {
        self.refs.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    pub fn table(&self, name: TableName) -> Option<&NatTable> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// Canonical text of this block alone, terminated by a newline.
    pub fn emit(&self) -> String {
        let mut out = format!("@{} {}\norder {}\n", self.kind, self.name, self.order);
        if let Some(labels) = &self.labels {
            out.push_str("labels ");
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        let mut refs = self.refs.clone();
        refs.sort_by_key(|(k, _)| *k);
        for (k, v) in refs {
            out.push_str(&format!("{} {v}\n", k.keyword()));
        }
        let mut tables: Vec<&NatTable> = self.tables.iter().collect();
        tables.sort_by_key(|t| t.name);
        for t in tables {
            match t.count {
                Some(k) => out.push_str(&format!("{} {k}:\n", t.name.keyword())),
                None => out.push_str(&format!("{}:\n", t.name.keyword())),
            }
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        }
        out
    }

    fn check_shape(&self) -> Result<(), NatError> {
        let err = |m: String| syntax(self.line, format!("{} {}: {m}", self.kind, self.name));
        let (refs, tables) = self.kind.shape();
        for key in refs {
            if self.reference(*key).is_none() {
                return Err(err(format!("missing `{}` reference", key.keyword())));
            }
        }
        if let Some((k, _)) = self.refs.iter().find(|(k, _)| !refs.contains(k)) {
            return Err(err(format!("unexpected `{}` reference", k.keyword())));
        }
        for name in tables {
            if self.table(*name).is_none() {
                return Err(err(format!("missing `{}` table", name.keyword())));
            }
        }
        if let Some(t) = self.tables.iter().find(|t| !tables.contains(&t.name)) {
            return Err(err(format!("unexpected `{}` table", t.name.keyword())));
        }
        if self.labels.is_some() && self.kind != BlockKind::Monoid {
            return Err(err("labels are only allowed on monoids".into()));
        }
        if let Some(l) = &self.labels {
            if l.len() != self.order {
                return Err(err(format!("{} labels for order {}", l.len(), self.order)));
            }
        }
        Ok(())
    }

    pub fn from_monoid(name: &str, m: &FiniteMonoid) -> Self {
        let default: Vec<String> = (0..m.order()).map(|i| i.to_string()).collect();
        NatBlock {
            kind: BlockKind::Monoid,
            name: name.into(),
            order: m.order(),
            labels: (m.labels() != default.as_slice()).then(|| m.labels().to_vec()),
            refs: vec![],
            tables: vec![table(TableName::Table, m.rows())],
            line: 0,
        }
    }

    pub fn from_group(name: &str, g: &FiniteAbelianGroup) -> Self {
        NatBlock {
            kind: BlockKind::Group,
            name: name.into(),
            order: g.order(),
            labels: None,
            refs: vec![],
            tables: vec![table(TableName::Add, g.rows())],
            line: 0,
        }
    }

    pub fn from_nearring(name: &str, monoid_ref: &str, n: &NearRing) -> Self {
        NatBlock {
            kind: BlockKind::NearRing,
            name: name.into(),
            order: n.order(),
            labels: None,
            refs: vec![(RefKey::MonoidRef, monoid_ref.into())],
            tables: vec![table(TableName::Add, n.additive().rows())],
            line: 0,
        }
    }

    pub fn from_module(name: &str, monoid_ref: &str, v: &MModule) -> Self {
        NatBlock {
            kind: BlockKind::Module,
            name: name.into(),
            order: v.order(),
            labels: None,
            refs: vec![(RefKey::MonoidRef, monoid_ref.into())],
            tables: vec![
                table(TableName::Add, v.group().rows()),
                table(TableName::Act, v.act_rows()),
            ],
            line: 0,
        }
    }

    pub fn from_multinearring(name: &str, monoid_ref: &str, r: &MultiNearRing) -> Self {
        let rows = r
            .designated()
            .iter()
            .flat_map(|n| n.additive().rows())
            .collect();
        NatBlock {
            kind: BlockKind::MultiNearRing,
            name: name.into(),
            order: r.monoid().order(),
            labels: None,
            refs: vec![(RefKey::MonoidRef, monoid_ref.into())],
            tables: vec![NatTable {
                name: TableName::Adds,
                count: Some(r.len()),
                rows,
            }],
            line: 0,
        }
    }

    pub fn from_morphism(name: &str, dom_ref: &str, cod_ref: &str, f: &ModuleMorphism) -> Self {
        NatBlock {
            kind: BlockKind::Morphism,
            name: name.into(),
            order: f.dom().order(),
            labels: None,
            refs: vec![(RefKey::Dom, dom_ref.into()), (RefKey::Cod, cod_ref.into())],
            tables: vec![table(TableName::Map, vec![f.map().to_vec()])],
            line: 0,
        }
    }
}

fn table(name: TableName, rows: Vec<Vec<ElementIndex>>) -> NatTable {
    NatTable {
        name,
        count: None,
        rows,
    }
}

/// A parsed document: blocks in declaration order with unique names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NatDocument {
    pub blocks: Vec<NatBlock>,
}

impl NatDocument {
    pub fn block(&self, name: &str) -> Option<&NatBlock> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// Canonical text: blocks in declaration order separated by one blank
    /// line, single spaces, trailing newline, no comments.
    pub fn emit(&self) -> String {
        self.blocks
            .iter()
            .map(NatBlock::emit)
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Appends a block, rejecting a duplicate name.
    pub fn push(&mut self, block: NatBlock) -> Result<(), NatError> {
        if self.block(&block.name).is_some() {
            return Err(syntax(block.line, format!("duplicate block name {}", block.name)));
        }
        self.blocks.push(block);
        Ok(())
    }
}

/// Parses a document without resolving references or validating tables.
pub fn parse_nat(text: &str) -> Result<NatDocument, NatError> {
    let mut doc = NatDocument::default();
    let mut current: Option<NatBlock> = None;
    // The table currently collecting rows.
    let mut open_table = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('@') {
            if let Some(b) = current.take() {
                finish(&mut doc, b)?;
            }
            let mut words = rest.split_whitespace();
            let kind_word = words.next().unwrap_or("");
            let kind = BlockKind::parse(kind_word)
                .ok_or_else(|| syntax(line_no, format!("unknown block kind {kind_word:?}")))?;
            let name = words
                .next()
                .ok_or_else(|| syntax(line_no, "block needs a name"))?;
            if words.next().is_some() {
                return Err(syntax(line_no, "trailing tokens after block name"));
            }
            if name.contains(':') {
                return Err(syntax(line_no, "block names may not contain ':'"));
            }
            current = Some(NatBlock {
                kind,
                name: name.into(),
                order: 0,
                labels: None,
                refs: vec![],
                tables: vec![],
                line: line_no,
            });
            open_table = false;
            continue;
        }
        let block = current
            .as_mut()
            .ok_or_else(|| syntax(line_no, "content before the first block header"))?;
        if let Some(head) = line.strip_suffix(':') {
            let mut words = head.split_whitespace();
            let word = words.next().unwrap_or("");
            let (name, count) = match word {
                "table" => (TableName::Table, None),
                "add" => (TableName::Add, None),
                "act" => (TableName::Act, None),
                "map" => (TableName::Map, None),
                "adds" => {
                    let k = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| syntax(line_no, "`adds` needs a count, e.g. `adds 2:`"))?;
                    (TableName::Adds, Some(k))
                }
                other => return Err(syntax(line_no, format!("unknown table {other:?}"))),
            };
            if words.next().is_some() {
                return Err(syntax(line_no, "trailing tokens after table name"));
            }
            if block.table(name).is_some() {
                return Err(syntax(line_no, format!("duplicate `{word}` table")));
            }
            block.tables.push(NatTable {
                name,
                count,
                rows: vec![],
            });
            open_table = true;
            continue;
        }
        let first = line.split_whitespace().next().unwrap_or("");
        if first.chars().all(|c| c.is_ascii_digit()) {
            if !open_table {
                return Err(syntax(line_no, "table row outside a table"));
            }
            let row = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<ElementIndex>()
                        .map_err(|_| syntax(line_no, format!("bad index {w:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            block
                .tables
                .last_mut()
                .expect("open table exists")
                .rows
                .push(row);
            continue;
        }
        if open_table {
            return Err(syntax(line_no, "headers must precede tables"));
        }
        let mut words = line.split_whitespace();
        let key = words.next().expect("line is not empty");
        let rest: Vec<&str> = words.collect();
        match key {
            "order" => {
                if block.order != 0 {
                    return Err(syntax(line_no, "duplicate `order`"));
                }
                block.order = match rest.as_slice() {
                    [n] => n.parse().ok().filter(|&n| n > 0),
                    _ => None,
                }
                .ok_or_else(|| syntax(line_no, "`order` takes one positive integer"))?;
            }
            "labels" => {
                if block.labels.is_some() {
                    return Err(syntax(line_no, "duplicate `labels`"));
                }
                block.labels = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            other => {
                let k = RefKey::parse(other)
                    .ok_or_else(|| syntax(line_no, format!("unknown header {other:?}")))?;
                if block.reference(k).is_some() {
                    return Err(syntax(line_no, format!("duplicate `{other}`")));
                }
                match rest.as_slice() {
                    [r] => block.refs.push((k, r.to_string())),
                    _ => return Err(syntax(line_no, format!("`{other}` takes one reference"))),
                }
            }
        }
    }
    if let Some(b) = current.take() {
        finish(&mut doc, b)?;
    }
    Ok(doc)
}

fn finish(doc: &mut NatDocument, block: NatBlock) -> Result<(), NatError> {
    if block.order == 0 {
        return Err(syntax(block.line, format!("block {} lacks `order`", block.name)));
    }
    block.check_shape()?;
    doc.push(block)
}
