use crate::linalg::LinearMap;
use crate::report::{expect_eq, VerificationReport};
use crate::weak_hopf::QuantumGroupoid;

/// A linear map `f : H → L` between quantum groupoids, given as a
/// `dim L × dim H` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGMorphism {
    pub source: QuantumGroupoid,
    pub target: QuantumGroupoid,
    pub matrix: LinearMap,
}

impl QGMorphism {
    pub fn identity(h: &QuantumGroupoid) -> Self {
        Self { source: h.clone(), target: h.clone(), matrix: LinearMap::identity(h.dim()) }
    }
}

pub fn check_morphism(f: &QGMorphism) -> VerificationReport {
    let (h, l, m) = (&f.source, &f.target, &f.matrix);
    let n = h.dim();
    let mut report = VerificationReport::new("morphism");
    if m.rows() != l.dim() || m.cols() != n {
        report.record("shape", false);
        return report;
    }
    report.check("f-multiplicative", || {
        for i in 0..n {
            for j in 0..n {
                let left = m.apply(&h.mul(&h.basis_vec(i), &h.basis_vec(j)));
                let right = l.mul(&m.column(i), &m.column(j));
                expect_eq(&[i, j], left, right)?;
            }
        }
        Ok(())
    });
    report.check("f-unital", || expect_eq(&[], m.apply(h.unit()), l.unit().to_vec()));
    let ff = m.kron(m);
    report.check("f-comultiplicative", || {
        for i in 0..n {
            expect_eq(&[i], ff.apply(&h.comul(&h.basis_vec(i))), l.comul(&m.column(i)))?;
        }
        Ok(())
    });
    report.check("f-counital", || {
        for i in 0..n {
            expect_eq(&[i], alloc::vec![l.counit(&m.column(i))], alloc::vec![h.counit(&h.basis_vec(i))])?;
        }
        Ok(())
    });
    report.check("f-antipode", || {
        let left = m.compose(h.antipode());
        let right = l.antipode().compose(m);
        for j in 0..n {
            expect_eq(&[j], left.column(j), right.column(j))?;
        }
        Ok(())
    });
    report
}
