//! A flat index of every block in a directory of `.nat` files.
//!
//! `index.tsv` has one header line and one row per block with the columns
//! `name`, `kind`, `order`, `content_hash` and `source_file`. The hash is
//! the SHA-256 of the block's canonical text, so reformatting or comments
//! never change it. Rows are sorted by kind keyword, then name, then file.

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::nat::{parse_nat, NatError};

pub const INDEX_FILE: &str = "index.tsv";
pub const HEADER: &str = "name\tkind\torder\tcontent_hash\tsource_file";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct CatalogRow {
    pub kind: String,
    pub name: String,
    pub source_file: String,
    pub order: usize,
    pub content_hash: String,
}

impl CatalogRow {
    fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.name, self.kind, self.order, self.content_hash, self.source_file
        )
    }
}

fn io_err(path: &Path, e: impl ToString) -> NatError {
    NatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Reads every `*.nat` file directly inside `dir` and returns the sorted
/// rows without writing anything.
pub fn collect(dir: &Path) -> Result<Vec<CatalogRow>, NatError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .map(|entry| entry.map(|e| e.path()).map_err(|e| io_err(dir, e)))
        .collect::<Result<Vec<_>, _>>()?;
    files.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "nat"));
    files.sort();
    let mut rows = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        let doc = parse_nat(&text)?;
        let source_file = path
            .file_name()
            .expect("read_dir entries have names")
            .to_string_lossy()
            .into_owned();
        for block in &doc.blocks {
            let digest = Sha256::digest(block.emit().as_bytes());
            rows.push(CatalogRow {
                kind: block.kind.keyword().to_string(),
                name: block.name.clone(),
                source_file: source_file.clone(),
                order: block.order,
                content_hash: digest.iter().map(|b| format!("{b:02x}")).collect(),
            });
        }
    }
    rows.sort();
    Ok(rows)
}

/// Rewrites `dir/index.tsv` atomically and returns its rows.
pub fn scan(dir: &Path) -> Result<Vec<CatalogRow>, NatError> {
    let rows = collect(dir)?;
    let mut text = String::from(HEADER);
    text.push('\n');
    for r in &rows {
        text.push_str(&r.line());
        text.push('\n');
    }
    let target = dir.join(INDEX_FILE);
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_err(dir, e))?;
    tmp.write_all(text.as_bytes()).map_err(|e| io_err(&target, e))?;
    tmp.persist(&target).map_err(|e| io_err(&target, e.error))?;
    Ok(rows)
}
