use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::Rational;
use crate::qt::{check_quasitriangular, twist_elements, twisted_algebra, QTStructure, TwistElements, WeakCocycle};
use crate::report::{expect_eq, VerificationReport};
use crate::weak_hopf::{check_quantum_groupoid, check_weak_bialgebra, QuantumGroupoid};

/// `(H, R, F)` together with the twisted `(H̃, R̃)`.
#[derive(Clone, Debug)]
pub struct TwistedPair {
    pub original: QuantumGroupoid,
    pub original_qt: QTStructure,
    pub cocycle: WeakCocycle,
    pub twisted: QuantumGroupoid,
    pub twisted_qt: QTStructure,
    pub elements: TwistElements,
}

/// `R̃ = F₂₁⁻¹RF` and `R̃⁻¹ = F⁻¹R⁻¹F₂₁`.
pub fn twisted_r(h: &QuantumGroupoid, qt: &QTStructure, wc: &WeakCocycle) -> QTStructure {
    let r = h.tensor_mul(2, &h.tensor_mul(2, &h.flip(wc.f_inv()), qt.r()), wc.f());
    let r_inv = h.tensor_mul(2, &h.tensor_mul(2, wc.f_inv(), qt.r_inv()), &h.flip(wc.f()));
    QTStructure::new(r, r_inv)
}

/// Builds `(H̃, R̃)` and runs the weak-bialgebra, quantum-groupoid and
/// quasitriangular suites on it; the first failing check is returned as
/// [`Error::TwistAxiomFailure`].
pub fn twist(h: &QuantumGroupoid, qt: &QTStructure, wc: &WeakCocycle) -> Result<TwistedPair, Error> {
    let twisted = twisted_algebra(h, wc)?;
    let twisted_qt = twisted_r(h, qt, wc);
    for report in
        [check_weak_bialgebra(&twisted), check_quantum_groupoid(&twisted), check_quasitriangular(&twisted, &twisted_qt)]
    {
        if let Some(c) = report.failures().next() {
            return Err(Error::TwistAxiomFailure(format!("{}/{}", report.suite, c.name)));
        }
    }
    Ok(TwistedPair {
        original: h.clone(),
        original_qt: qt.clone(),
        cocycle: wc.clone(),
        twisted,
        twisted_qt,
        elements: twist_elements(h, wc),
    })
}

/// `Δ(v⁻¹) = ((S⊗S)(F₂₁⁻¹))(v⁻¹ ⊗ v⁻¹)F⁻¹`, with `v`, `v⁻¹` and `v·v⁻¹`
/// recorded as observations.
pub fn check_twist_element_identities(h: &QuantumGroupoid, wc: &WeakCocycle) -> VerificationReport {
    let mut report = VerificationReport::new("twist-element");
    let tw = twist_elements(h, wc);
    let s = h.antipode();
    report.check("coproduct-of-v-inverse", || {
        let left = h.comul(&tw.v_inv);
        let ss = h.map_at(&h.map_at(&h.flip(wc.f_inv()), 2, 0, s), 2, 1, s);
        let vv: Vec<Rational> = crate::linalg::tensor::outer(&tw.v_inv, &tw.v_inv);
        let right = h.tensor_mul(2, &h.tensor_mul(2, &ss, &vv), wc.f_inv());
        expect_eq(&[], left, right)
    });
    report.observe("v", tw.v.clone());
    report.observe("v^-1", tw.v_inv.clone());
    report.observe("v*v^-1", h.mul(&tw.v, &tw.v_inv));
    report
}
