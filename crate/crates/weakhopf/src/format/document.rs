use weakhopf_core::category::HModule;
use weakhopf_core::{LinearMap, QuantumGroupoid, Rational, WeakBialgebra};

/// A quasitriangular structure as stored on disk; the inverse may be
/// omitted and solved once the algebra is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtDoc {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    pub r: Vec<Rational>,
    pub r_inv: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleDoc {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    pub f: Vec<Rational>,
    pub f_inv: Option<Vec<Rational>>,
}

/// A linear map between two named algebras, `dim target × dim source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub matrix: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    WeakBialgebra(WeakBialgebra),
    QuantumGroupoid(QuantumGroupoid),
    QtStructure(QtDoc),
    Cocycle(CocycleDoc),
    Morphism(MorphismDoc),
    Module(HModule),
}

impl Document {
    pub fn name(&self) -> &str {
        match self {
            Document::WeakBialgebra(b) => b.name(),
            Document::QuantumGroupoid(h) => h.name(),
            Document::QtStructure(q) => &q.name,
            Document::Cocycle(c) => &c.name,
            Document::Morphism(m) => &m.name,
            Document::Module(m) => m.name(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::WeakBialgebra(_) => "weak-bialgebra",
            Document::QuantumGroupoid(_) => "quantum-groupoid",
            Document::QtStructure(_) => "qt-structure",
            Document::Cocycle(_) => "cocycle",
            Document::Morphism(_) => "morphism",
            Document::Module(_) => "module",
        }
    }
}
