use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::tensor::{apply_each, permute};
use crate::linalg::{unit_vector, LinearMap, Rational};
use crate::report::{expect_eq, VerificationReport, Witness};

use super::context::ModuleCategory;
use super::module::{check_module, HModule};

fn columns_equal(a: &LinearMap, b: &LinearMap, prefix: &[usize]) -> Result<(), Witness> {
    for j in 0..a.cols() {
        let mut idx = prefix.to_vec();
        idx.push(j);
        expect_eq(&idx, a.column(j), b.column(j))?;
    }
    Ok(())
}

/// `f ∘ ρ_src(e_i) = ρ_dst(e_i) ∘ f` for all `i`.
pub(crate) fn linear_between(f: &LinearMap, src: &[LinearMap], dst: &[LinearMap]) -> Result<(), Witness> {
    for (i, (a, b)) in src.iter().zip(dst).enumerate() {
        columns_equal(&f.compose(a), &b.compose(f), &[i])?;
    }
    Ok(())
}

fn two_sided_inverse(f: &LinearMap, g: &LinearMap) -> Result<(), Witness> {
    columns_equal(&f.compose(g), &LinearMap::identity(f.rows()), &[0])?;
    columns_equal(&g.compose(f), &LinearMap::identity(g.rows()), &[1])
}

/// Projector idempotence and the module axioms on `M ⊗_t N`.
pub fn check_truncated_tensor(ctx: &ModuleCategory, m: &HModule, n: &HModule) -> VerificationReport {
    let mut report = VerificationReport::new("truncated-tensor");
    let t = match ctx.tensor(m, n) {
        Ok(t) => t,
        Err(_) => {
            report.record("same-algebra", false);
            return report;
        }
    };
    let p = t.projector();
    report.check("projector-idempotent", || columns_equal(&p.compose(p), p, &[]));
    report.check("image-is-submodule", || {
        for i in 0..ctx.structure().dim() {
            let op = ctx.plain_tensor_action(i, m, n);
            for (k, b) in t.image().vectors().iter().enumerate() {
                let moved = op.apply(b);
                if !t.image().contains(&moved) {
                    return Err(Witness::new(&[i, k], moved, p.apply(&op.apply(b))));
                }
            }
        }
        Ok(())
    });
    let induced = t.as_module("tensor", ctx.structure().name());
    for c in check_module(ctx.structure(), &induced).checks {
        report.checks.push(c);
    }
    report
}

/// `l`, `r` are module maps with two-sided inverses.
pub fn check_unitors(ctx: &ModuleCategory, m: &HModule) -> VerificationReport {
    let mut report = VerificationReport::new("unitors");
    let (l, r) = match ctx.unitors(m) {
        Ok(pair) => pair,
        Err(_) => {
            report.record("same-algebra", false);
            return report;
        }
    };
    let unit = ctx.unit_object();
    let left = ctx.tensor(&unit, m).expect("accepted above");
    let right = ctx.tensor(m, &unit).expect("accepted above");
    report.check("left-unitor-linear", || linear_between(&l, left.actions(), m.actions()));
    report.check("right-unitor-linear", || linear_between(&r, right.actions(), m.actions()));
    report.check("left-unitor-bijective", || match l.inverse() {
        Some(li) => two_sided_inverse(&l, &li),
        None => Err(Witness::new(&[], vec![], vec![])),
    });
    report.check("right-unitor-bijective", || match r.inverse() {
        Some(ri) => two_sided_inverse(&r, &ri),
        None => Err(Witness::new(&[], vec![], vec![])),
    });
    report
}

/// Invertibility and module-linearity of the braiding `M ⊗_t N → N ⊗_t M`.
pub fn check_braiding(ctx: &ModuleCategory, m: &HModule, n: &HModule) -> VerificationReport {
    let mut report = VerificationReport::new("braiding");
    let (Ok(mn), Ok(nm)) = (ctx.tensor(m, n), ctx.tensor(n, m)) else {
        report.record("same-algebra", false);
        return report;
    };
    let b = ctx.braiding(m, n).expect("accepted");
    let bi = ctx.braiding_inverse(m, n).expect("accepted");
    report.check("braiding-linear", || linear_between(&b, mn.actions(), nm.actions()));
    report.check("braiding-inverse-linear", || linear_between(&bi, nm.actions(), mn.actions()));
    report.check("braiding-inverse-after", || columns_equal(&bi.compose(&b), &LinearMap::identity(mn.dim()), &[]));
    report.check("braiding-inverse-before", || columns_equal(&b.compose(&bi), &LinearMap::identity(nm.dim()), &[]));
    report.check("braiding-lands-in-image", || {
        let plain = ctx.braiding_plain(m, n);
        for (k, v) in mn.image().vectors().iter().enumerate() {
            let out = plain.apply(v);
            if !nm.image().contains(&out) {
                return Err(Witness::new(&[k], out.clone(), nm.projector().apply(&out)));
            }
        }
        Ok(())
    });
    report
}

/// `(g ⊗ f) ∘ Ψ_{M,N} = Ψ_{M',N'} ∘ (f ⊗ g)` on `M ⊗_t N`, for module maps
/// `f : M → M'` and `g : N → N'`.
pub fn check_naturality(
    ctx: &ModuleCategory,
    (m, m2, f): (&HModule, &HModule, &LinearMap),
    (n, n2, g): (&HModule, &HModule, &LinearMap),
) -> VerificationReport {
    let mut report = VerificationReport::new("naturality");
    let Ok(mn) = ctx.tensor(m, n) else {
        report.record("same-algebra", false);
        return report;
    };
    let lhs = g.kron(f).compose(&ctx.braiding_plain(m, n)).compose(&mn.inclusion());
    let rhs = ctx.braiding_plain(m2, n2).compose(&f.kron(g)).compose(&mn.inclusion());
    report.check("braiding-natural", || columns_equal(&lhs, &rhs, &[]));
    report
}

/// `Σ x_abc ρ_U(a) ⊗ ρ_V(b) ⊗ ρ_W(c)` applied to `v`.
pub(crate) fn act3(x: &[Rational], mods: [&HModule; 3], v: &[Rational]) -> Vec<Rational> {
    let k = mods[0].actions().len();
    let dims = [mods[0].dim(), mods[1].dim(), mods[2].dim()];
    let mut out = vec![Rational::zero(); v.len()];
    for (abc, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b, cc) = (abc / (k * k), (abc / k) % k, abc % k);
        let term = apply_each(v, &dims, &[mods[0].action(a), mods[1].action(b), mods[2].action(cc)]);
        crate::linalg::axpy(&mut out, c, &term);
    }
    out
}

/// Both hexagon identities on `U ⊗_t V ⊗_t W`, with the associator taken as
/// plain re-bracketing. Cost grows with `(dim U · dim V · dim W)²`.
pub fn check_hexagons(ctx: &ModuleCategory, u: &HModule, v: &HModule, w: &HModule) -> VerificationReport {
    let h = ctx.structure();
    let r = ctx.braid_element();
    let mut report = VerificationReport::new("hexagons");
    let d1 = h.delta_one();
    let p3 = h.comul_at(&d1, 2, 0);
    let dims = [u.dim(), v.dim(), w.dim()];
    let total = dims.iter().product::<usize>();
    let spanning: Vec<Vec<Rational>> = (0..total).map(|i| act3(&p3, [u, v, w], &unit_vector(total, i))).collect();

    let r12 = h.legs(r, &[0, 1], 3);
    let r23 = h.legs(r, &[1, 2], 3);
    let delta_id = h.comul_at(r, 2, 0);
    let id_delta = h.comul_at(r, 2, 1);

    report.check("hexagon-outer-left", || {
        for (k, x) in spanning.iter().enumerate() {
            let lhs = permute(&act3(&delta_id, [u, v, w], x), &dims, &[2, 0, 1]);
            let step = permute(&act3(&r23, [u, v, w], x), &dims, &[0, 2, 1]);
            let mid = [u, w, v];
            let rhs = permute(&act3(&r12, mid, &step), &[dims[0], dims[2], dims[1]], &[1, 0, 2]);
            expect_eq(&[k], lhs, rhs)?;
        }
        Ok(())
    });
    report.check("hexagon-outer-right", || {
        for (k, x) in spanning.iter().enumerate() {
            let lhs = permute(&act3(&id_delta, [u, v, w], x), &dims, &[1, 2, 0]);
            let step = permute(&act3(&r12, [u, v, w], x), &dims, &[1, 0, 2]);
            let mid = [v, u, w];
            let rhs = permute(&act3(&r23, mid, &step), &[dims[1], dims[0], dims[2]], &[0, 2, 1]);
            expect_eq(&[k], lhs, rhs)?;
        }
        Ok(())
    });
    report
}
