use std::fmt::Write;

use weakhopf_core::linalg::format_rational;
use weakhopf_core::transmutation::BraidedHopfPresentation;
use weakhopf_core::{LinearMap, Rational, WeakBialgebra};

use super::document::Document;

fn scalar(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key}: {value}").expect("writing to a String");
}

fn section(out: &mut String, key: &str, flat: &[Rational], width: usize) {
    writeln!(out, "{key}:").expect("writing to a String");
    for row in flat.chunks(width.max(1)) {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        writeln!(out, "  {}", cells.join(" ")).expect("writing to a String");
    }
}

fn matrix(out: &mut String, key: &str, m: &LinearMap) {
    section(out, key, m.entries(), m.cols());
}

fn bialgebra_fields(out: &mut String, kind: &str, b: &WeakBialgebra) {
    let n = b.dim();
    scalar(out, "kind", kind);
    scalar(out, "name", b.name());
    scalar(out, "dim", n);
    scalar(out, "basis", b.basis_names().join(" "));
    section(out, "mul", b.mul_tensor(), n);
    section(out, "unit", b.unit(), n);
    section(out, "comul", b.comul_tensor(), n);
    section(out, "counit", b.counit_vector(), n);
}

pub fn write_document(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::WeakBialgebra(b) => bialgebra_fields(&mut out, doc.kind(), b),
        Document::QuantumGroupoid(h) => {
            bialgebra_fields(&mut out, doc.kind(), h.base());
            matrix(&mut out, "antipode", h.antipode());
        }
        Document::QtStructure(q) => {
            scalar(&mut out, "kind", doc.kind());
            scalar(&mut out, "name", &q.name);
            scalar(&mut out, "algebra", &q.algebra);
            scalar(&mut out, "dim", q.dim);
            section(&mut out, "element2", &q.r, q.dim);
            if let Some(inv) = &q.r_inv {
                section(&mut out, "element2-inverse", inv, q.dim);
            }
        }
        Document::Cocycle(c) => {
            scalar(&mut out, "kind", doc.kind());
            scalar(&mut out, "name", &c.name);
            scalar(&mut out, "algebra", &c.algebra);
            scalar(&mut out, "dim", c.dim);
            section(&mut out, "element2", &c.f, c.dim);
            if let Some(inv) = &c.f_inv {
                section(&mut out, "element2-inverse", inv, c.dim);
            }
        }
        Document::Morphism(m) => {
            scalar(&mut out, "kind", doc.kind());
            scalar(&mut out, "name", &m.name);
            scalar(&mut out, "source", &m.source);
            scalar(&mut out, "target", &m.target);
            matrix(&mut out, "matrix", &m.matrix);
        }
        Document::Module(m) => {
            scalar(&mut out, "kind", doc.kind());
            scalar(&mut out, "name", m.name());
            scalar(&mut out, "algebra", m.algebra_name());
            scalar(&mut out, "dim", m.dim());
            writeln!(out, "action:").expect("writing to a String");
            for a in m.actions() {
                for row in a.entries().chunks(m.dim()) {
                    let cells: Vec<String> = row.iter().map(format_rational).collect();
                    writeln!(out, "  {}", cells.join(" ")).expect("writing to a String");
                }
            }
        }
    }
    out
}

/// All documents in canonical order, separated by `---` lines.
pub fn write_documents(docs: &[Document]) -> String {
    let mut sorted: Vec<&Document> = docs.iter().collect();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    sorted.iter().map(|d| write_document(d)).collect::<Vec<_>>().join("---\n")
}

/// A presentation in carrier coordinates. Names are omitted, so two
/// presentations serialize identically exactly when their carriers, target
/// subalgebras, module actions and structure maps coincide.
pub fn write_presentation(p: &BraidedHopfPresentation) -> String {
    let mut out = String::new();
    let ambient = p.carrier.ambient_dim();
    scalar(&mut out, "kind", "braided-hopf");
    scalar(&mut out, "ambient-dim", ambient);
    scalar(&mut out, "carrier-dim", p.carrier_dim());
    scalar(&mut out, "target-dim", p.target_dim());
    let carrier: Vec<Rational> = p.carrier.vectors().iter().flatten().cloned().collect();
    section(&mut out, "carrier", &carrier, ambient);
    let target: Vec<Rational> = p.target.vectors().iter().flatten().cloned().collect();
    section(&mut out, "target", &target, ambient);
    section(&mut out, "target-one", &p.target_one, p.target_dim());
    writeln!(out, "action:").expect("writing to a String");
    for a in p.module.actions() {
        for row in a.entries().chunks(p.carrier_dim().max(1)) {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(out, "  {}", cells.join(" ")).expect("writing to a String");
        }
    }
    matrix(&mut out, "mul", &p.mul);
    matrix(&mut out, "unit", &p.unit);
    matrix(&mut out, "comul", &p.comul);
    matrix(&mut out, "counit", &p.counit);
    matrix(&mut out, "antipode", &p.antipode);
    out
}
