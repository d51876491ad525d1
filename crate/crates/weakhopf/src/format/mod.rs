//! A line-oriented text format for algebraic objects.
//!
//! A file holds one or more documents separated by `---` lines. Each
//! document is a list of `key: value` fields; a field with an empty value
//! opens a section whose rows follow on indented lines. Blank lines and
//! lines starting with `#` are ignored.
//!
//! ```text
//! kind: quantum-groupoid
//! name: N
//! dim: 2
//! basis: e1 e2
//! mul:
//!   1 0
//!   0 0
//!   0 0
//!   0 1
//! unit:
//!   1 1
//! ...
//! ```
//!
//! Section layouts, with the last index varying fastest along a row:
//!
//! | kind | section | rows × width |
//! |---|---|---|
//! | `weak-bialgebra`, `quantum-groupoid` | `mul`, `comul` | `n²` × `n` |
//! | | `unit`, `counit` | 1 × `n` |
//! | `quantum-groupoid` | `antipode` (optional, solved if absent) | `n` × `n` |
//! | `qt-structure`, `cocycle` | `element2`, `element2-inverse` (optional) | `n` × `n` |
//! | `morphism` | `matrix` | `dim target` × `dim source` |
//! | `module` | `action` | `(dim algebra · dim)` × `dim` |
//!
//! The writer emits a canonical form: fixed field order, reduced
//! rationals, two-space row indent and documents sorted by name, so that
//! parsing and re-serializing a canonical file reproduces it byte for byte.

mod document;
mod parse;
mod write;

pub use document::{CocycleDoc, Document, MorphismDoc, QtDoc};
pub use parse::{parse_documents, FormatError};
pub use write::{write_document, write_documents, write_presentation};
