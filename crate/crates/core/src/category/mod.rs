//! Module categories: truncated tensor products, the unit object `H_t`,
//! unitors and the `Ψ` / `Φ` braidings.

mod checks;
mod context;
mod module;
mod tensor;

pub(crate) use checks::{act3, linear_between};
pub use checks::{check_braiding, check_hexagons, check_naturality, check_truncated_tensor, check_unitors};
pub use context::{BraidingKind, ModuleCategory};
pub(crate) use module::restrict;
pub use module::{check_module, is_module_map, HModule};
pub use tensor::{element2_action, TruncatedTensor};

#[cfg(test)]
mod tests {
    use alloc::vec::Vec;

    use super::*;
    use crate::error::Error;
    use crate::linalg::{tensor::outer, unit_vector, zeros, LinearMap, Rational, SubspaceBasis};
    use crate::qt::{canonical_r, WeakCocycle};
    use crate::zoo::{d4, d4_fixture, d4_mixed_fixture, diagonal_n, n_fixture, pair_groupoid, z2};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i)
    }

    #[test]
    fn truncated_tensor_dimensions() {
        let n = diagonal_n();
        let ctx = ModuleCategory::psi(&n, &canonical_r(&n).unwrap());
        let reg = HModule::regular(&n);
        let t = ctx.tensor(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.projector().compose(t.projector()), *t.projector());

        let z = z2();
        let reg = HModule::regular(&z);
        assert_eq!(ModuleCategory::psi(&z, &canonical_r(&z).unwrap()).tensor(&reg, &reg).unwrap().dim(), 4);

        // e_ij ⊗ e_kl survives Δ(1) exactly when both arrows share a target
        let p = pair_groupoid();
        let reg = HModule::regular(&p);
        let same_target = (0..16).filter(|ab| (ab / 4) / 2 == (ab % 4) / 2).count();
        let t = ModuleCategory::psi(&p, &canonical_r(&p).unwrap()).tensor(&reg, &reg).unwrap();
        assert_eq!(t.dim(), same_target);
        assert_eq!(t.dim(), t.projector().rank());
    }

    #[test]
    fn tensor_rejects_foreign_module() {
        let n = diagonal_n();
        let ctx = ModuleCategory::psi(&n, &canonical_r(&n).unwrap());
        let foreign = HModule::regular(&z2());
        assert!(matches!(ctx.tensor(&foreign, &foreign), Err(Error::MismatchedAlgebra(_, _))));
    }

    #[test]
    fn unitors_on_diagonal_algebra() {
        let n = diagonal_n();
        let ctx = ModuleCategory::psi(&n, &canonical_r(&n).unwrap());
        let reg = HModule::regular(&n);
        let l = ctx.left_unitor_plain(&reg);
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { e(2, i) } else { zeros(2) };
                assert_eq!(l.apply(&outer(&e(2, i), &e(2, j))), expected);
            }
        }
        let r = ctx.right_unitor_plain(&reg);
        assert_eq!(r, l.compose(&LinearMap::flip(2, 2)));
        assert!(check_unitors(&ctx, &reg).passes());
    }

    #[test]
    fn unitor_on_group_algebra_is_identity() {
        let z = z2();
        let ctx = ModuleCategory::psi(&z, &canonical_r(&z).unwrap());
        let reg = HModule::regular(&z);
        let (l, r) = ctx.unitors(&reg).unwrap();
        assert!(l.is_identity());
        assert!(r.is_identity());
    }

    #[test]
    fn psi_examples() {
        let n = diagonal_n();
        let ctx = ModuleCategory::psi(&n, &canonical_r(&n).unwrap());
        let reg = HModule::regular(&n);
        let plain = ctx.braiding_plain(&reg, &reg);
        for i in 0..2 {
            let v = outer(&e(2, i), &e(2, i));
            assert_eq!(plain.apply(&v), v);
        }

        let g = d4();
        let ctx = ModuleCategory::psi(&g, &canonical_r(&g).unwrap());
        let reg = HModule::regular(&g);
        assert_eq!(ctx.braiding(&reg, &reg).unwrap(), LinearMap::flip(8, 8));

        for h in [diagonal_n(), pair_groupoid(), z2()] {
            let ctx = ModuleCategory::psi(&h, &canonical_r(&h).unwrap());
            let reg = HModule::regular(&h);
            let b = ctx.braiding(&reg, &reg).unwrap();
            let bi = ctx.braiding_inverse(&reg, &reg).unwrap();
            assert!(b.compose(&bi).is_identity(), "{}", h.name());
            assert!(check_braiding(&ctx, &reg, &reg).passes(), "{}", h.name());
        }
    }

    #[test]
    fn phi_examples() {
        let g = d4();
        let ctx = ModuleCategory::phi(&g, &WeakCocycle::trivial(&g)).unwrap();
        let adj = HModule::adjoint(&g, &SubspaceBasis::whole(8)).unwrap();
        assert_eq!(ctx.braiding(&adj, &adj).unwrap(), LinearMap::flip(8, 8));

        let fx = n_fixture();
        let ctx = ModuleCategory::phi(&fx.algebra, &fx.cocycle).unwrap();
        let adj = HModule::adjoint(&fx.algebra, &SubspaceBasis::whole(2)).unwrap();
        let plain = ctx.braiding_plain(&adj, &adj);
        for i in 0..2 {
            let v = outer(&e(2, i), &e(2, i));
            assert_eq!(plain.apply(&v), v);
        }

        let fx = d4_fixture();
        let ctx = ModuleCategory::phi(&fx.algebra, &fx.cocycle).unwrap();
        let adj = HModule::adjoint(&fx.algebra, &SubspaceBasis::whole(8)).unwrap();
        let b = ctx.braiding(&adj, &adj).unwrap();
        assert!(b.compose(&b).is_identity());
        assert_eq!(b, LinearMap::flip(8, 8));
        assert!(check_braiding(&ctx, &adj, &adj).passes());

        let fx = d4_mixed_fixture();
        let ctx = ModuleCategory::phi(&fx.algebra, &fx.cocycle).unwrap();
        let adj = HModule::adjoint(&fx.algebra, &SubspaceBasis::whole(8)).unwrap();
        let b = ctx.braiding(&adj, &adj).unwrap();
        assert!(b.compose(&b).is_identity());
        assert_eq!(b, LinearMap::flip(8, 8));
        assert!(check_braiding(&ctx, &adj, &adj).passes());
    }

    #[test]
    fn phi_requires_cocommutative() {
        let f = crate::zoo::groupoid_function_algebra("fun", &crate::zoo::GroupoidSpec::pair(2)).unwrap();
        let wc = WeakCocycle::trivial(&f);
        assert_eq!(ModuleCategory::phi(&f, &wc).unwrap_err(), Error::NotCocommutative);
    }

    #[test]
    fn braiding_is_natural_for_left_multiplication() {
        let p = pair_groupoid();
        let ctx = ModuleCategory::psi(&p, &canonical_r(&p).unwrap());
        let reg = HModule::regular(&p);
        // right multiplication commutes with the left action
        let f = p.right_mul(&p.basis_vec(1));
        let g = p.right_mul(&p.basis_vec(2));
        assert!(is_module_map(&f, &reg, &reg));
        assert!(check_naturality(&ctx, (&reg, &reg, &f), (&reg, &reg, &g)).passes());
    }
}
