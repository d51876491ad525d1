//! Loaded documents and the lookups that tie them together.

use std::path::{Path, PathBuf};

use thiserror::Error;
use weakhopf_core::category::HModule;
use weakhopf_core::qt::{QTStructure, WeakCocycle};
use weakhopf_core::transmutation::QGMorphism;
use weakhopf_core::QuantumGroupoid;

use crate::format::{parse_documents, CocycleDoc, Document, FormatError, MorphismDoc, QtDoc};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error("document `{0}` is defined twice")]
    Duplicate(String),
    #[error("no {kind} named `{name}`")]
    Missing { kind: &'static str, name: String },
    #[error("expected exactly one {kind}, found {found}; select one by name")]
    Ambiguous { kind: &'static str, found: usize },
    #[error("`{name}`: dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { name: String, expected: usize, found: usize },
    #[error("`{name}`: {source}")]
    Structure {
        name: String,
        #[source]
        source: weakhopf_core::Error,
    },
}

#[derive(Debug, Default)]
pub struct Library {
    docs: Vec<Document>,
}

impl Library {
    pub fn load(paths: &[PathBuf]) -> Result<Self, LoadError> {
        let mut lib = Library::default();
        for path in paths {
            lib.load_file(path)?;
        }
        Ok(lib)
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), LoadError> {
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.into(), source })?;
        let docs = parse_documents(&text).map_err(|source| LoadError::Format { path: path.into(), source })?;
        for d in docs {
            self.add(d)?;
        }
        Ok(())
    }

    pub fn add(&mut self, doc: Document) -> Result<(), LoadError> {
        if self.docs.iter().any(|d| d.name() == doc.name()) {
            return Err(LoadError::Duplicate(doc.name().into()));
        }
        self.docs.push(doc);
        Ok(())
    }

    pub fn documents(&self) -> &[Document] {
        &self.docs
    }

    pub fn names(&self) -> Vec<String> {
        self.docs.iter().map(|d| d.name().to_string()).collect()
    }

    pub fn algebra(&self, name: &str) -> Result<&QuantumGroupoid, LoadError> {
        self.docs
            .iter()
            .find_map(|d| match d {
                Document::QuantumGroupoid(h) if h.name() == name => Some(h),
                _ => None,
            })
            .ok_or_else(|| LoadError::Missing { kind: "quantum-groupoid", name: name.into() })
    }

    fn check_dim(name: &str, h: &QuantumGroupoid, dim: usize) -> Result<(), LoadError> {
        if h.dim() == dim {
            Ok(())
        } else {
            Err(LoadError::DimensionMismatch { name: name.into(), expected: h.dim(), found: dim })
        }
    }

    /// The algebra and structure of a qt-structure document, solving the
    /// inverse when it was omitted.
    pub fn resolve_qt(&self, q: &QtDoc) -> Result<(QuantumGroupoid, QTStructure), LoadError> {
        let h = self.algebra(&q.algebra)?;
        Self::check_dim(&q.name, h, q.dim)?;
        let qt = match &q.r_inv {
            Some(inv) => QTStructure::new(q.r.clone(), inv.clone()),
            None => QTStructure::with_solved_inverse(h, q.r.clone())
                .map_err(|source| LoadError::Structure { name: q.name.clone(), source })?,
        };
        Ok((h.clone(), qt))
    }

    pub fn resolve_cocycle(&self, c: &CocycleDoc) -> Result<(QuantumGroupoid, WeakCocycle), LoadError> {
        let h = self.algebra(&c.algebra)?;
        Self::check_dim(&c.name, h, c.dim)?;
        let wc = match &c.f_inv {
            Some(inv) => WeakCocycle::new(c.f.clone(), inv.clone()),
            None => WeakCocycle::with_solved_inverse(h, c.f.clone())
                .map_err(|source| LoadError::Structure { name: c.name.clone(), source })?,
        };
        Ok((h.clone(), wc))
    }

    pub fn resolve_morphism(&self, m: &MorphismDoc) -> Result<QGMorphism, LoadError> {
        let source = self.algebra(&m.source)?.clone();
        let target = self.algebra(&m.target)?.clone();
        let shape = (m.matrix.rows(), m.matrix.cols());
        if shape != (target.dim(), source.dim()) {
            return Err(LoadError::DimensionMismatch {
                name: m.name.clone(),
                expected: target.dim() * source.dim(),
                found: shape.0 * shape.1,
            });
        }
        Ok(QGMorphism { source, target, matrix: m.matrix.clone() })
    }

    pub fn resolve_module(&self, m: &HModule) -> Result<QuantumGroupoid, LoadError> {
        let h = self.algebra(m.algebra_name())?;
        if m.actions().len() != h.dim() {
            return Err(LoadError::DimensionMismatch {
                name: m.name().into(),
                expected: h.dim(),
                found: m.actions().len(),
            });
        }
        Ok(h.clone())
    }

    pub fn qt_docs(&self) -> impl Iterator<Item = &QtDoc> {
        self.docs.iter().filter_map(|d| match d {
            Document::QtStructure(q) => Some(q),
            _ => None,
        })
    }

    pub fn cocycle_docs(&self) -> impl Iterator<Item = &CocycleDoc> {
        self.docs.iter().filter_map(|d| match d {
            Document::Cocycle(c) => Some(c),
            _ => None,
        })
    }

    pub fn morphism_docs(&self) -> impl Iterator<Item = &MorphismDoc> {
        self.docs.iter().filter_map(|d| match d {
            Document::Morphism(m) => Some(m),
            _ => None,
        })
    }

    pub fn select_qt(&self, name: Option<&str>) -> Result<&QtDoc, LoadError> {
        select("qt-structure", self.qt_docs(), |q| &q.name, name)
    }

    pub fn select_cocycle(&self, name: Option<&str>) -> Result<&CocycleDoc, LoadError> {
        select("cocycle", self.cocycle_docs(), |c| &c.name, name)
    }

    /// The morphism named `name`, the only morphism present, or none.
    pub fn select_morphism(&self, name: Option<&str>) -> Result<Option<&MorphismDoc>, LoadError> {
        if name.is_none() && self.morphism_docs().next().is_none() {
            return Ok(None);
        }
        select("morphism", self.morphism_docs(), |m| &m.name, name).map(Some)
    }
}

fn select<'a, T>(
    kind: &'static str,
    items: impl Iterator<Item = &'a T>,
    name_of: impl Fn(&T) -> &str,
    wanted: Option<&str>,
) -> Result<&'a T, LoadError> {
    let items: Vec<&T> = items.collect();
    match wanted {
        Some(w) => {
            items.into_iter().find(|x| name_of(x) == w).ok_or_else(|| LoadError::Missing { kind, name: w.into() })
        }
        None if items.len() == 1 => Ok(items[0]),
        None => Err(LoadError::Ambiguous { kind, found: items.len() }),
    }
}
