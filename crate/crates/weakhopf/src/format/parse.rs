use std::collections::BTreeMap;

use thiserror::Error;
use weakhopf_core::category::HModule;
use weakhopf_core::linalg::parse_rational;
use weakhopf_core::weak_hopf::with_solved_antipode;
use weakhopf_core::{LinearMap, QuantumGroupoid, Rational, WeakBialgebra};

use super::document::{CocycleDoc, Document, MorphismDoc, QtDoc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },
    #[error("line {line}, field `{field}`: dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { line: usize, field: String, expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Structure {
        line: usize,
        #[source]
        source: weakhopf_core::Error,
    },
}

impl FormatError {
    pub fn line(&self) -> usize {
        match self {
            FormatError::Parse { line, .. }
            | FormatError::DimensionMismatch { line, .. }
            | FormatError::Structure { line, .. } => *line,
        }
    }

    fn parse(line: usize, field: &str, message: impl Into<String>) -> Self {
        FormatError::Parse { line, field: field.to_string(), message: message.into() }
    }
}

enum Value<'a> {
    Scalar(&'a str),
    Rows(Vec<(usize, Vec<&'a str>)>),
}

struct Field<'a> {
    line: usize,
    value: Value<'a>,
}

/// One document's fields, keyed by name, before interpretation.
struct RawDoc<'a> {
    start: usize,
    fields: BTreeMap<&'a str, Field<'a>>,
}

pub fn parse_documents(text: &str) -> Result<Vec<Document>, FormatError> {
    let mut docs = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line == "---" {
            docs.push(std::mem::take(&mut current));
        } else {
            current.push((i + 1, line));
        }
    }
    docs.push(current);
    let mut out = Vec::new();
    for lines in docs {
        if let Some(raw) = split_fields(&lines)? {
            out.push(interpret(raw)?);
        }
    }
    if out.is_empty() {
        return Err(FormatError::parse(1, "kind", "no documents"));
    }
    Ok(out)
}

fn split_fields<'a>(lines: &[(usize, &'a str)]) -> Result<Option<RawDoc<'a>>, FormatError> {
    let mut fields: BTreeMap<&'a str, Field<'a>> = BTreeMap::new();
    let mut open: Option<&'a str> = None;
    let mut start = None;
    for &(no, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        start.get_or_insert(no);
        if line.starts_with(' ') || line.starts_with('\t') {
            let key = open.ok_or_else(|| FormatError::parse(no, "", "indented row outside a section"))?;
            if let Some(Field { value: Value::Rows(rows), .. }) = fields.get_mut(key) {
                rows.push((no, trimmed.split_whitespace().collect()));
            }
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| FormatError::parse(no, line, "expected `key: value`"))?;
        if key.is_empty() || !key.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-') {
            return Err(FormatError::parse(no, key, "malformed field name"));
        }
        if fields.contains_key(key) {
            return Err(FormatError::parse(no, key, "duplicate field"));
        }
        let rest = rest.trim();
        let value = if rest.is_empty() {
            open = Some(key);
            Value::Rows(Vec::new())
        } else {
            open = None;
            Value::Scalar(rest)
        };
        fields.insert(key, Field { line: no, value });
    }
    Ok(start.map(|start| RawDoc { start, fields }))
}

impl<'a> RawDoc<'a> {
    fn allow(&self, allowed: &[&str]) -> Result<(), FormatError> {
        for (key, f) in &self.fields {
            if !allowed.contains(key) {
                return Err(FormatError::parse(f.line, key, "unknown field"));
            }
        }
        Ok(())
    }

    fn field(&self, key: &str) -> Result<&Field<'a>, FormatError> {
        self.fields.get(key).ok_or_else(|| FormatError::parse(self.start, key, "missing field"))
    }

    fn line(&self, key: &str) -> usize {
        self.fields.get(key).map_or(self.start, |f| f.line)
    }

    fn scalar(&self, key: &str) -> Result<&'a str, FormatError> {
        let f = self.field(key)?;
        match f.value {
            Value::Scalar(s) => Ok(s),
            Value::Rows(_) => Err(FormatError::parse(f.line, key, "expected a value on the same line")),
        }
    }

    fn name(&self, key: &str) -> Result<String, FormatError> {
        let s = self.scalar(key)?;
        if s.split_whitespace().count() != 1 {
            return Err(FormatError::parse(self.line(key), key, "names may not contain whitespace"));
        }
        Ok(s.to_string())
    }

    fn count(&self, key: &str) -> Result<usize, FormatError> {
        let s = self.scalar(key)?;
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(FormatError::parse(self.line(key), key, format!("expected a positive integer, found `{s}`"))),
        }
    }

    /// Rows of the section `key`, each exactly `width` rationals wide.
    fn rows(&self, key: &str, width: usize) -> Result<Vec<Vec<Rational>>, FormatError> {
        let f = self.field(key)?;
        let Value::Rows(rows) = &f.value else {
            return Err(FormatError::parse(f.line, key, "expected indented rows below the field"));
        };
        if rows.is_empty() {
            return Err(FormatError::parse(f.line, key, "empty section"));
        }
        rows.iter()
            .map(|(no, tokens)| {
                if tokens.len() != width {
                    return Err(FormatError::DimensionMismatch {
                        line: *no,
                        field: key.to_string(),
                        expected: width,
                        found: tokens.len(),
                    });
                }
                tokens
                    .iter()
                    .map(|t| {
                        parse_rational(t)
                            .ok_or_else(|| FormatError::parse(*no, key, format!("`{t}` is not a rational")))
                    })
                    .collect()
            })
            .collect()
    }

    /// `key` as a flat vector of `count` rows of `width`.
    fn flat(&self, key: &str, count: usize, width: usize) -> Result<Vec<Rational>, FormatError> {
        let rows = self.rows(key, width)?;
        if rows.len() != count {
            return Err(FormatError::DimensionMismatch {
                line: self.line(key),
                field: format!("{key} rows"),
                expected: count,
                found: rows.len(),
            });
        }
        Ok(rows.into_iter().flatten().collect())
    }

    fn optional_flat(&self, key: &str, count: usize, width: usize) -> Result<Option<Vec<Rational>>, FormatError> {
        if self.fields.contains_key(key) {
            self.flat(key, count, width).map(Some)
        } else {
            Ok(None)
        }
    }

    fn structure<T>(&self, r: Result<T, weakhopf_core::Error>) -> Result<T, FormatError> {
        r.map_err(|source| FormatError::Structure { line: self.start, source })
    }
}

const ALGEBRA_FIELDS: [&str; 9] = ["kind", "name", "dim", "basis", "mul", "unit", "comul", "counit", "antipode"];
const ELEMENT2_FIELDS: [&str; 6] = ["kind", "name", "algebra", "dim", "element2", "element2-inverse"];

fn interpret(raw: RawDoc<'_>) -> Result<Document, FormatError> {
    let kind = raw.scalar("kind")?;
    match kind {
        "weak-bialgebra" => {
            raw.allow(&ALGEBRA_FIELDS[..8])?;
            Ok(Document::WeakBialgebra(bialgebra(&raw)?))
        }
        "quantum-groupoid" => {
            raw.allow(&ALGEBRA_FIELDS)?;
            let base = bialgebra(&raw)?;
            let n = base.dim();
            let h = match raw.optional_flat("antipode", n, n)? {
                Some(s) => raw.structure(QuantumGroupoid::new(base, LinearMap::from_entries(n, n, s).expect("n×n")))?,
                None => raw.structure(with_solved_antipode(base))?,
            };
            Ok(Document::QuantumGroupoid(h))
        }
        "qt-structure" | "cocycle" => {
            raw.allow(&ELEMENT2_FIELDS)?;
            let name = raw.name("name")?;
            let algebra = raw.name("algebra")?;
            let dim = raw.count("dim")?;
            let x = raw.flat("element2", dim, dim)?;
            let x_inv = raw.optional_flat("element2-inverse", dim, dim)?;
            Ok(if kind == "qt-structure" {
                Document::QtStructure(QtDoc { name, algebra, dim, r: x, r_inv: x_inv })
            } else {
                Document::Cocycle(CocycleDoc { name, algebra, dim, f: x, f_inv: x_inv })
            })
        }
        "morphism" => {
            raw.allow(&["kind", "name", "source", "target", "matrix"])?;
            let f = raw.field("matrix")?;
            let width = match &f.value {
                Value::Rows(rows) if !rows.is_empty() => rows[0].1.len(),
                _ => 0,
            };
            let rows = raw.rows("matrix", width.max(1))?;
            let entries: Vec<Rational> = rows.iter().flatten().cloned().collect();
            let matrix = LinearMap::from_entries(rows.len(), width.max(1), entries).expect("rectangular rows");
            Ok(Document::Morphism(MorphismDoc {
                name: raw.name("name")?,
                source: raw.name("source")?,
                target: raw.name("target")?,
                matrix,
            }))
        }
        "module" => {
            raw.allow(&["kind", "name", "algebra", "dim", "action"])?;
            let dim = raw.count("dim")?;
            let rows = raw.rows("action", dim)?;
            if rows.len() % dim != 0 {
                return Err(FormatError::DimensionMismatch {
                    line: raw.line("action"),
                    field: "action rows".into(),
                    expected: (rows.len() / dim + 1) * dim,
                    found: rows.len(),
                });
            }
            let action = rows
                .chunks(dim)
                .map(|m| LinearMap::from_entries(dim, dim, m.iter().flatten().cloned().collect()).expect("dim×dim"))
                .collect();
            let m = raw.structure(HModule::new(raw.name("name")?, raw.name("algebra")?, dim, action))?;
            Ok(Document::Module(m))
        }
        other => Err(FormatError::parse(raw.line("kind"), "kind", format!("unknown kind `{other}`"))),
    }
}

fn bialgebra(raw: &RawDoc<'_>) -> Result<WeakBialgebra, FormatError> {
    let name = raw.name("name")?;
    let n = raw.count("dim")?;
    let basis: Vec<String> = raw.scalar("basis")?.split_whitespace().map(str::to_string).collect();
    if basis.len() != n {
        return Err(FormatError::DimensionMismatch {
            line: raw.line("basis"),
            field: "basis".into(),
            expected: n,
            found: basis.len(),
        });
    }
    let mul = raw.flat("mul", n * n, n)?;
    let unit = raw.flat("unit", 1, n)?;
    let comul = raw.flat("comul", n * n, n)?;
    let counit = raw.flat("counit", 1, n)?;
    raw.structure(WeakBialgebra::new(name, basis, mul, unit, comul, counit))
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: &str = "\
kind: weak-bialgebra
name: N
dim: 2
basis: e1 e2
mul:
  1 0
  0 0
  0 0
  0 1
unit:
  1 1
comul:
  1 0
  0 0
  0 0
  0 1
counit:
  1 1
";

    #[test]
    fn parses_diagonal_algebra() {
        let docs = parse_documents(N).unwrap();
        let Document::WeakBialgebra(b) = &docs[0] else { panic!("wrong kind") };
        assert_eq!(b.dim(), 2);
        assert_eq!(b.basis_names(), ["e1", "e2"]);
    }

    #[test]
    fn unknown_field_names_line_and_field() {
        let text = N.replace("dim: 2\n", "dim: 2\ncolour: red\n");
        let err = parse_documents(&text).unwrap_err();
        assert_eq!(err, FormatError::Parse { line: 4, field: "colour".into(), message: "unknown field".into() });
    }

    #[test]
    fn empty_section_is_a_parse_error() {
        let text = N.replace("mul:\n  1 0\n  0 0\n  0 0\n  0 1\n", "mul:\n");
        let err = parse_documents(&text).unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 5, ref field, .. } if field == "mul"), "{err}");
    }

    #[test]
    fn short_row_is_a_dimension_mismatch() {
        let text = N.replace("unit:\n  1 1\n", "unit:\n  1\n");
        let err = parse_documents(&text).unwrap_err();
        assert_eq!(err, FormatError::DimensionMismatch { line: 11, field: "unit".into(), expected: 2, found: 1 });
    }

    #[test]
    fn bad_rational_is_reported() {
        let text = N.replace("counit:\n  1 1", "counit:\n  1 one");
        let err = parse_documents(&text).unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 18, .. }), "{err}");
    }

    #[test]
    fn missing_antipode_is_solved() {
        let text = N.replace("weak-bialgebra", "quantum-groupoid");
        let Document::QuantumGroupoid(h) = &parse_documents(&text).unwrap()[0] else { panic!("wrong kind") };
        assert!(h.antipode().is_identity());
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(parse_documents("# nothing\n").is_err());
    }
}
