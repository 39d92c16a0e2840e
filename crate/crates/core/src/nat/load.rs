use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::{parse_nat, BlockKind, NatBlock, NatDocument, NatError, RefKey, TableName, ValidationError};
use crate::andre::MultiNearRing;
use crate::group::FiniteAbelianGroup;
use crate::module::{MModule, ModuleMorphism};
use crate::monoid::FiniteMonoid;
use crate::nearring::NearRing;

/// A validated structure built from one block.
#[derive(Debug, Clone)]
pub enum Structure {
    Monoid(Arc<FiniteMonoid>),
    Group(FiniteAbelianGroup),
    NearRing(NearRing),
    Module(MModule),
    MultiNearRing(MultiNearRing),
    Morphism(ModuleMorphism),
}

impl Structure {
    pub fn kind(&self) -> BlockKind {
        match self {
            Structure::Monoid(_) => BlockKind::Monoid,
            Structure::Group(_) => BlockKind::Group,
            Structure::NearRing(_) => BlockKind::NearRing,
            Structure::Module(_) => BlockKind::Module,
            Structure::MultiNearRing(_) => BlockKind::MultiNearRing,
            Structure::Morphism(_) => BlockKind::Morphism,
        }
    }
}

/// A parsed and fully validated file.
#[derive(Debug)]
pub struct LoadedFile {
    pub path: PathBuf,
    pub document: NatDocument,
    pub structures: Vec<(String, Structure)>,
}

impl LoadedFile {
    pub fn get(&self, name: &str) -> Option<&Structure> {
        self.structures.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

/// Loads `.nat` files, resolving cross-file references and caching each
/// file by canonical path so that shared monoids stay shared.
#[derive(Debug, Default)]
pub struct Workspace {
    files: HashMap<PathBuf, Arc<LoadedFile>>,
    loading: Vec<PathBuf>,
}

fn io_err(path: &Path, e: impl ToString) -> NatError {
    NatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn shape(message: impl Into<String>) -> ValidationError {
    ValidationError::Shape(message.into())
}

/// Outcome of building one block: references that fail to resolve are
/// errors of the document, a table that fails its axioms is a result.
enum Built {
    Ok(Structure),
    Invalid(ValidationError),
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn load_file(&mut self, path: &Path) -> Result<Arc<LoadedFile>, NatError> {
        let canon = std::fs::canonicalize(path).map_err(|e| io_err(path, e))?;
        if let Some(f) = self.files.get(&canon) {
            return Ok(Arc::clone(f));
        }
        if self.loading.contains(&canon) {
            return Err(io_err(path, "circular file reference"));
        }
        let text = std::fs::read_to_string(&canon).map_err(|e| io_err(path, e))?;
        self.loading.push(canon.clone());
        let loaded = self.load_text(&text, &canon);
        self.loading.pop();
        let loaded = Arc::new(loaded?);
        self.files.insert(canon, Arc::clone(&loaded));
        Ok(loaded)
    }

    /// Parses and validates `text` as if it were stored at `path`; relative
    /// cross-file references resolve against the parent of `path`.
    pub fn load_text(&mut self, text: &str, path: &Path) -> Result<LoadedFile, NatError> {
        let document = parse_nat(text)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let mut structures: Vec<(String, Structure)> = Vec::new();
        for block in &document.blocks {
            match self.build(block, &structures, &base)? {
                Built::Ok(s) => structures.push((block.name.clone(), s)),
                Built::Invalid(source) => {
                    return Err(NatError::Validation {
                        block: block.name.clone(),
                        source,
                    })
                }
            }
        }
        Ok(LoadedFile {
            path: path.to_path_buf(),
            document,
            structures,
        })
    }

    /// Resolves `path:Name`, or `path` alone when the file has one block.
    pub fn resolve(&mut self, spec: &str) -> Result<Structure, NatError> {
        let (path, name) = split_reference(spec);
        let file = self.load_file(Path::new(path))?;
        match name {
            Some(n) => file
                .get(n)
                .cloned()
                .ok_or_else(|| NatError::UnresolvedReference(spec.into())),
            None if file.structures.len() == 1 => Ok(file.structures[0].1.clone()),
            None => Err(NatError::UnresolvedReference(format!(
                "{spec} holds {} blocks; name one with {spec}:<name>",
                file.structures.len()
            ))),
        }
    }

    /// Validates the block named by `path:Name`. Every earlier block of the
    /// file must be valid; the target's own validation outcome is returned
    /// as the inner result so callers can report its witness.
    pub fn check(&mut self, spec: &str) -> Result<Result<Structure, ValidationError>, NatError> {
        let (path, name) = split_reference(spec);
        let path = Path::new(path);
        let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        let document = parse_nat(&text)?;
        let name = match name {
            Some(n) => n.to_string(),
            None if document.blocks.len() == 1 => document.blocks[0].name.clone(),
            None => return Err(NatError::UnresolvedReference(spec.into())),
        };
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let mut structures: Vec<(String, Structure)> = Vec::new();
        for block in &document.blocks {
            let built = self.build(block, &structures, &base)?;
            if block.name == name {
                return Ok(match built {
                    Built::Ok(s) => Ok(s),
                    Built::Invalid(e) => Err(e),
                });
            }
            match built {
                Built::Ok(s) => structures.push((block.name.clone(), s)),
                Built::Invalid(source) => {
                    return Err(NatError::Validation {
                        block: block.name.clone(),
                        source,
                    })
                }
            }
        }
        Err(NatError::UnresolvedReference(spec.into()))
    }

    fn lookup(
        &mut self,
        reference: &str,
        local: &[(String, Structure)],
        base: &Path,
    ) -> Result<Structure, NatError> {
        match split_reference(reference) {
            (path, Some(name)) if path.ends_with(".nat") => {
                let file = self.load_file(&base.join(path))?;
                file.get(name)
                    .cloned()
                    .ok_or_else(|| NatError::UnresolvedReference(reference.into()))
            }
            _ => local
                .iter()
                .find(|(n, _)| n == reference)
                .map(|(_, s)| s.clone())
                .ok_or_else(|| NatError::UnresolvedReference(reference.into())),
        }
    }

    fn build(
        &mut self,
        block: &NatBlock,
        local: &[(String, Structure)],
        base: &Path,
    ) -> Result<Built, NatError> {
        let mut fetch = |key: RefKey, want: BlockKind| -> Result<Structure, NatError> {
            let r = block.reference(key).expect("shape checked");
            let s = self.lookup(r, local, base)?;
            if s.kind() != want {
                return Err(NatError::Validation {
                    block: block.name.clone(),
                    source: shape(format!("{r} is a {}, expected a {want}", s.kind())),
                });
            }
            Ok(s)
        };
        let mut deps = Vec::new();
        for key in [RefKey::MonoidRef, RefKey::Dom, RefKey::Cod] {
            if block.reference(key).is_some() {
                let want = if key == RefKey::MonoidRef { BlockKind::Monoid } else { BlockKind::Module };
                deps.push(fetch(key, want)?);
            }
        }
        Ok(match validate_block(block, deps) {
            Ok(s) => Built::Ok(s),
            Err(e) => Built::Invalid(e),
        })
    }
}

fn validate_block(block: &NatBlock, deps: Vec<Structure>) -> Result<Structure, ValidationError> {
    let rows = |name: TableName| block.table(name).expect("shape checked").rows.clone();
    let order_matches = |n: usize, what: &str| {
        if n == block.order {
            Ok(())
        } else {
            Err(shape(format!("order {} but {what} has {n} elements", block.order)))
        }
    };
    let mut deps = deps.into_iter();
    let mut monoid = || match deps.next() {
        Some(Structure::Monoid(m)) => m,
        _ => unreachable!("kind checked"),
    };
    Ok(match block.kind {
        BlockKind::Monoid => {
            let t = rows(TableName::Table);
            let m = match &block.labels {
                Some(l) => FiniteMonoid::validate(block.order, l.clone(), t)?,
                None => {
                    order_matches(t.len(), "the table")?;
                    FiniteMonoid::new(t)?
                }
            };
            Structure::Monoid(Arc::new(m))
        }
        BlockKind::Group => Structure::Group(FiniteAbelianGroup::validate(block.order, rows(TableName::Add))?),
        BlockKind::NearRing => {
            let m = monoid();
            order_matches(m.order(), "the monoid")?;
            Structure::NearRing(NearRing::validate(m, rows(TableName::Add))?)
        }
        BlockKind::Module => {
            let m = monoid();
            let g = FiniteAbelianGroup::validate(block.order, rows(TableName::Add))?;
            Structure::Module(MModule::validate(m, g, rows(TableName::Act))?)
        }
        BlockKind::MultiNearRing => {
            let m = monoid();
            order_matches(m.order(), "the monoid")?;
            let t = block.table(TableName::Adds).expect("shape checked");
            let k = t.count.unwrap_or(0);
            let n = m.order();
            if t.rows.len() != k * n {
                return Err(shape(format!("`adds {k}:` needs {} rows, got {}", k * n, t.rows.len())));
            }
            let designated = t
                .rows
                .chunks(n)
                .take(k)
                .map(|c| NearRing::validate(Arc::clone(&m), c.to_vec()))
                .collect::<Result<Vec<_>, _>>()?;
            Structure::MultiNearRing(MultiNearRing::new(m, designated)?)
        }
        BlockKind::Morphism => {
            let mut modules = deps.map(|s| match s {
                Structure::Module(v) => v,
                _ => unreachable!("kind checked"),
            });
            let (dom, cod) = (modules.next().expect("dom"), modules.next().expect("cod"));
            order_matches(dom.order(), "the domain")?;
            let map = match rows(TableName::Map).as_slice() {
                [row] => row.clone(),
                other => return Err(shape(format!("`map:` needs one row, got {}", other.len()))),
            };
            Structure::Morphism(ModuleMorphism::new(dom, cod, map)?)
        }
    })
}

/// Splits `file.nat:Name` at the last colon; a bare path has no name.
fn split_reference(spec: &str) -> (&str, Option<&str>) {
    match spec.rsplit_once(':') {
        Some((path, name)) if !name.is_empty() && !name.contains('/') => (path, Some(name)),
        _ => (spec, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unresolved_and_wrong_kind() {
        let mut ws = Workspace::new();
        let text = "@module V\norder 1\nmonoid M\nadd:\n0\nact:\n0\n";
        assert_eq!(
            ws.load_text(text, Path::new("x.nat")).unwrap_err(),
            NatError::UnresolvedReference("M".into())
        );
        let text = "@group G\norder 1\nadd:\n0\n@module V\norder 1\nmonoid G\nadd:\n0\nact:\n0\n";
        assert!(matches!(
            ws.load_text(text, Path::new("x.nat")),
            Err(NatError::Validation { .. })
        ));
    }

    #[test]
    fn cross_file_references() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("m2.nat"), "@monoid M\norder 2\ntable:\n0 0\n0 1\n").unwrap();
        std::fs::write(
            dir.path().join("v.nat"),
            "@module V\norder 2\nmonoid m2.nat:M\nadd:\n0 1\n1 0\nact:\n0 0\n0 1\n",
        )
        .unwrap();
        let mut ws = Workspace::new();
        let spec = format!("{}:V", dir.path().join("v.nat").display());
        let Structure::Module(v) = ws.resolve(&spec).unwrap() else {
            panic!("expected a module");
        };
        let Structure::Monoid(m) = ws.resolve(&format!("{}:M", dir.path().join("m2.nat").display())).unwrap() else {
            panic!("expected a monoid");
        };
        assert!(Arc::ptr_eq(v.monoid(), &m));
    }

    #[test]
    fn circular_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.nat");
        std::fs::write(&p, "@nearring N\norder 1\nmonoid a.nat:N\nadd:\n0\n").unwrap();
        assert!(matches!(Workspace::new().load_file(&p), Err(NatError::Io { .. })));
    }
}
