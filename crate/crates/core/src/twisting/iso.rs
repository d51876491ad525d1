use alloc::vec::Vec;

use crate::category::{linear_between, HModule, ModuleCategory};
use crate::error::Error;
use crate::linalg::LinearMap;
use crate::qt::{QTStructure, WeakCocycle};
use crate::quantization::quantize;
use crate::report::{expect_eq, VerificationReport, Witness};
use crate::transmutation::{self_transmute, BraidedHopfPresentation};
use crate::weak_hopf::QuantumGroupoid;

use super::alpha::{alpha_map, check_alpha, require_canonical, AlphaMaps};
use super::pair::{twist, TwistedPair};

/// Everything [`verify_isomorphism`] builds, with its report.
#[derive(Clone, Debug)]
pub struct IsomorphismOutcome {
    pub pair: TwistedPair,
    pub quantized: BraidedHopfPresentation,
    pub transmuted: BraidedHopfPresentation,
    pub maps: AlphaMaps,
    pub report: VerificationReport,
}

impl IsomorphismOutcome {
    /// Whether the two presentations coincide map for map in canonical
    /// carrier coordinates.
    pub fn presentations_equal(&self) -> bool {
        self.quantized.same_structure(&self.transmuted)
    }
}

fn columns_equal(a: &LinearMap, b: &LinearMap) -> Result<(), Witness> {
    for j in 0..a.cols() {
        expect_eq(&[j], a.column(j), b.column(j))?;
    }
    Ok(())
}

/// Builds `C_H(H_s)_F` and `C_{H̃}(H̃_s)` from `(H, F)` and checks that `α`
/// is an isomorphism of Hopf algebras in `H̃`-modules: module map, algebra
/// map, unit, coalgebra map, counit, antipode and bijectivity.
///
/// Requires `H` cocommutative and `R = Δcop(1)Δ(1)`.
pub fn verify_isomorphism(
    h: &QuantumGroupoid,
    qt: &QTStructure,
    wc: &WeakCocycle,
) -> Result<IsomorphismOutcome, Error> {
    require_canonical(h, qt)?;
    let pair = twist(h, qt, wc)?;
    let quantized = quantize(h, wc)?;
    let transmuted = self_transmute(&pair.twisted, &pair.twisted_qt)?;
    let maps = alpha_map(&pair)?;
    let (a, ai) = (&maps.alpha, &maps.alpha_inv);
    let (pf, pt) = (&quantized, &transmuted);
    let ctx = ModuleCategory::phi(h, wc)?;
    let cc = ctx.tensor(&pf.module, &pf.module)?;

    let mut report = VerificationReport::new("isomorphism");
    report.check("module-map", || linear_between(a, pf.module.actions(), pt.module.actions()));
    report.check("algebra-map", || {
        let incl = cc.inclusion();
        columns_equal(&a.compose(&pf.mul).compose(&incl), &pt.mul.compose(&a.kron(a)).compose(&incl))
    });
    report.check("unit", || columns_equal(&a.compose(&pf.unit), &pt.unit));
    report.check("coalgebra-map", || columns_equal(&a.kron(a).compose(&pf.comul), &pt.comul.compose(a)));
    report.check("counit", || columns_equal(&pt.counit.compose(a), &pf.counit));
    report.check("antipode", || columns_equal(&pt.antipode.compose(a), &a.compose(&pf.antipode)));
    report.check("bijectivity", || {
        columns_equal(&ai.compose(a), &LinearMap::identity(a.cols()))?;
        columns_equal(&a.compose(ai), &LinearMap::identity(a.rows()))
    });
    report.absorb(check_alpha(&pair, &maps));
    Ok(IsomorphismOutcome { pair, quantized, transmuted, maps, report })
}

/// Compares the `Φ`-context of `(H, F)` with the `Ψ`-context of `(H̃, R̃)` on
/// `M ⊗ N`: tensor actions, truncation projectors, unit objects, unitors and
/// braidings, each as a matrix equality.
pub fn check_category_identification(pair: &TwistedPair, m: &HModule, n: &HModule) -> VerificationReport {
    let mut report = VerificationReport::new("category-identification");
    let phi = match ModuleCategory::phi(&pair.original, &pair.cocycle) {
        Ok(ctx) => ctx,
        Err(_) => {
            report.record("cocommutative", false);
            return report;
        }
    };
    let psi = ModuleCategory::psi_named(pair.original.name(), &pair.twisted, &pair.twisted_qt);
    let h = &pair.original;
    let k = h.dim();
    report.check("tensor-action", || {
        let direct: Vec<LinearMap> = (0..k)
            .map(|i| {
                let x = h.tensor_mul(
                    2,
                    &h.tensor_mul(2, pair.cocycle.f_inv(), &h.comul(&h.basis_vec(i))),
                    pair.cocycle.f(),
                );
                phi.element2_action(&x, m, n)
            })
            .collect();
        for i in 0..k {
            columns_equal(&phi.plain_tensor_action(i, m, n), &direct[i])?;
            columns_equal(&psi.plain_tensor_action(i, m, n), &direct[i])?;
        }
        Ok(())
    });
    report.check("unit-object", || {
        let (u, v) = (phi.unit_object(), psi.unit_object());
        for i in 0..k {
            columns_equal(u.action(i), v.action(i))?;
        }
        Ok(())
    });
    report.check("unitors", || {
        columns_equal(&phi.left_unitor_plain(m), &psi.left_unitor_plain(m))?;
        columns_equal(&phi.right_unitor_plain(m), &psi.right_unitor_plain(m))
    });
    report.check("braiding", || {
        columns_equal(&phi.braiding_plain(m, n), &psi.braiding_plain(m, n))?;
        columns_equal(&phi.braiding_inverse_plain(m, n), &psi.braiding_inverse_plain(m, n))
    });
    report
}
