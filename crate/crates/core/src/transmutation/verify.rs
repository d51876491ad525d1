use alloc::vec;
use alloc::vec::Vec;

use crate::category::{act3, linear_between, ModuleCategory};
use crate::linalg::tensor::apply_block;
use crate::linalg::{unit_vector, LinearMap, Rational};
use crate::report::{expect_eq, VerificationReport, Witness};

use super::presentation::BraidedHopfPresentation;

fn columns_equal(a: &LinearMap, b: &LinearMap) -> Result<(), Witness> {
    for j in 0..a.cols() {
        expect_eq(&[j], a.column(j), b.column(j))?;
    }
    Ok(())
}

fn on_vectors(
    vs: &[Vec<Rational>],
    a: impl Fn(&[Rational]) -> Vec<Rational>,
    b: impl Fn(&[Rational]) -> Vec<Rational>,
) -> Result<(), Witness> {
    for (k, v) in vs.iter().enumerate() {
        expect_eq(&[k], a(v), b(v))?;
    }
    Ok(())
}

/// Checks every Hopf-algebra axiom of `p` inside `ctx`, with maps on
/// truncated tensors evaluated on spanning sets of their images.
pub fn verify_braided_hopf(p: &BraidedHopfPresentation, ctx: &ModuleCategory) -> VerificationReport {
    let mut report = VerificationReport::new("braided-hopf");
    let c = p.carrier_dim();
    let module = &p.module;
    let unit_obj = ctx.unit_object();
    let (Ok(cc), Ok(tc), Ok(ct), Ok(tt)) = (
        ctx.tensor(module, module),
        ctx.tensor(&unit_obj, module),
        ctx.tensor(module, &unit_obj),
        ctx.tensor(&unit_obj, &unit_obj),
    ) else {
        report.record("same-algebra", false);
        return report;
    };
    let id = LinearMap::identity(c);
    let image_cc = cc.image().vectors();

    report.check("mul-linear", || linear_between(&p.mul.compose(&cc.inclusion()), cc.actions(), module.actions()));
    report.check("unit-linear", || linear_between(&p.unit, unit_obj.actions(), module.actions()));
    let comul_in = report.check("comul-in-truncated-tensor", || {
        for k in 0..c {
            let col = p.comul.column(k);
            if !cc.image().contains(&col) {
                return Err(Witness::new(&[k], col.clone(), cc.projector().apply(&col)));
            }
        }
        Ok(())
    });
    if comul_in {
        let comul_img = cc.projection().compose(&p.comul);
        report.check("comul-linear", || linear_between(&comul_img, module.actions(), cc.actions()));
    } else {
        report.record("comul-linear", false);
    }
    report.check("counit-linear", || linear_between(&p.counit, module.actions(), unit_obj.actions()));
    report.check("antipode-linear", || linear_between(&p.antipode, module.actions(), module.actions()));

    let h = ctx.structure();
    let p3 = h.comul_at(&h.delta_one(), 2, 0);
    let spanning3: Vec<Vec<Rational>> =
        (0..c * c * c).map(|i| act3(&p3, [module, module, module], &unit_vector(c * c * c, i))).collect();
    let mul_left = p.mul.compose(&p.mul.kron(&id));
    let mul_right = p.mul.compose(&id.kron(&p.mul));
    report.check("associativity", || on_vectors(&spanning3, |v| mul_left.apply(v), |v| mul_right.apply(v)));

    let l_c = ctx.left_unitor_plain(module);
    let r_c = ctx.right_unitor_plain(module);
    let id_t = LinearMap::identity(p.target_dim());
    report.check("left-unit-law", || {
        columns_equal(&p.mul.compose(&p.unit.kron(&id)).compose(&tc.inclusion()), &l_c.compose(&tc.inclusion()))
    });
    report.check("right-unit-law", || {
        columns_equal(&p.mul.compose(&id.kron(&p.unit)).compose(&ct.inclusion()), &r_c.compose(&ct.inclusion()))
    });

    report.check("coassociativity", || {
        columns_equal(&p.comul.kron(&id).compose(&p.comul), &id.kron(&p.comul).compose(&p.comul))
    });
    report.check("left-counit-law", || columns_equal(&l_c.compose(&p.counit.kron(&id)).compose(&p.comul), &id));
    report.check("right-counit-law", || columns_equal(&r_c.compose(&id.kron(&p.counit)).compose(&p.comul), &id));

    let braid = ctx.braiding_plain(module, module);
    let comul2 = p.comul.kron(&p.comul);
    let mul2 = p.mul.kron(&p.mul);
    report.check("bialgebra-compatibility", || {
        on_vectors(
            image_cc,
            |v| p.comul.apply(&p.mul.apply(v)),
            |v| mul2.apply(&apply_block(&comul2.apply(v), c, c * c, c, &braid)),
        )
    });

    let l_t = ctx.left_unitor_plain(&unit_obj);
    report.check("counit-multiplicative", || {
        on_vectors(image_cc, |v| p.counit.apply(&p.mul.apply(v)), |v| l_t.apply(&p.counit.kron(&p.counit).apply(v)))
    });
    report.check("counit-unit", || columns_equal(&p.counit.compose(&p.unit), &id_t));
    report.check("unit-grouplike", || {
        let Some(l_inv) = l_t.compose(&tt.inclusion()).inverse() else {
            return Err(Witness::new(&[], vec![], vec![]));
        };
        let rhs = p.unit.kron(&p.unit).compose(&tt.inclusion()).compose(&l_inv);
        columns_equal(&p.comul.compose(&p.unit), &rhs)
    });

    let eta_eps = p.unit.compose(&p.counit);
    report.check("antipode-left", || columns_equal(&p.mul.compose(&p.antipode.kron(&id)).compose(&p.comul), &eta_eps));
    report.check("antipode-right", || columns_equal(&p.mul.compose(&id.kron(&p.antipode)).compose(&p.comul), &eta_eps));
    report
}
