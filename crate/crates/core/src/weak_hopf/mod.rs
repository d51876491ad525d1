//! Weak bialgebras and quantum groupoids over the rationals.

mod algebra;
mod antipode;
mod verify;

pub use algebra::{QuantumGroupoid, WeakBialgebra};
pub use antipode::{solve_antipode, with_solved_antipode};
pub use verify::{check_counital_maps, check_quantum_groupoid, check_weak_bialgebra};

#[cfg(test)]
mod tests {
    use alloc::vec;
    use alloc::vec::Vec;

    use super::*;
    use crate::linalg::{int, unit_vector, zeros, LinearMap, Rational, SubspaceBasis};
    use crate::zoo::{d4, diagonal_n, pair_groupoid, z2};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i)
    }

    fn with_counit(h: &QuantumGroupoid, counit: Vec<Rational>) -> WeakBialgebra {
        let b = h.base();
        WeakBialgebra::new(
            b.name(),
            b.basis_names().to_vec(),
            b.mul_tensor().to_vec(),
            b.unit().to_vec(),
            b.comul_tensor().to_vec(),
            counit,
        )
        .unwrap()
    }

    #[test]
    fn diagonal_and_pair_pass_every_suite() {
        for h in [diagonal_n(), pair_groupoid()] {
            assert!(check_weak_bialgebra(&h).passes(), "{}", h.name());
            assert!(check_counital_maps(&h).passes(), "{}", h.name());
            assert!(check_quantum_groupoid(&h).passes(), "{}", h.name());
        }
    }

    #[test]
    fn zero_counit_breaks_counit_axiom() {
        let broken = with_counit(&diagonal_n(), zeros(2));
        let report = check_weak_bialgebra(&broken);
        let check = report.get("counit-axiom").unwrap();
        assert!(!check.passed);
        assert!(check.witness.is_some());
    }

    #[test]
    fn epsilon_t_examples() {
        let n = diagonal_n();
        for i in 0..2 {
            assert_eq!(n.epsilon_t(&e(2, i)), e(2, i));
        }
        let z = z2();
        assert_eq!(z.epsilon_t(&e(2, 1)), z.unit().to_vec());
        let p = pair_groupoid();
        // basis e11, e12, e21, e22
        assert_eq!(p.epsilon_t(&e(4, 1)), e(4, 0));
        assert_eq!(p.epsilon_s(&e(4, 1)), e(4, 3));
    }

    #[test]
    fn target_subalgebra_examples() {
        assert_eq!(diagonal_n().target_subalgebra(), SubspaceBasis::whole(2));
        assert_eq!(z2().target_subalgebra().dim(), 1);
        assert_eq!(d4().target_subalgebra().dim(), 1);
        let p = pair_groupoid();
        assert_eq!(p.target_subalgebra(), SubspaceBasis::span(4, vec![e(4, 0), e(4, 3)]));
        assert_eq!(p.source_subalgebra(), p.target_subalgebra());
    }

    #[test]
    fn convolution_examples() {
        let n = diagonal_n();
        let id = LinearMap::identity(2);
        assert_eq!(n.convolve(&id, &id), id);
        let z = z2();
        let eps_unit = LinearMap::from_fn(2, 2, |r, _| z.unit()[r].clone());
        assert_eq!(z.convolve(&LinearMap::identity(2), z.antipode()), eps_unit);
    }

    #[test]
    fn solved_antipode_examples() {
        assert_eq!(solve_antipode(diagonal_n().base()).unwrap(), LinearMap::identity(2));
        let transpose = LinearMap::from_fn(4, 4, |r, c| {
            let (i, j) = (c / 2, c % 2);
            if r == j * 2 + i {
                int(1)
            } else {
                int(0)
            }
        });
        assert_eq!(solve_antipode(pair_groupoid().base()).unwrap(), transpose);
    }

    #[test]
    fn negated_antipode_fails_convolution() {
        let n = diagonal_n();
        let neg = LinearMap::identity(2).scale(&int(-1));
        let broken = QuantumGroupoid::new(n.base().clone(), neg).unwrap();
        let report = check_quantum_groupoid(&broken);
        assert!(!report.get("id*S=eps_t").unwrap().passed);
    }

    #[test]
    fn commutativity_flags() {
        assert!(diagonal_n().is_commutative() && diagonal_n().is_cocommutative());
        assert!(!d4().is_commutative() && d4().is_cocommutative());
        assert!(!pair_groupoid().is_commutative() && pair_groupoid().is_cocommutative());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element(n: usize) -> impl Strategy<Value = Vec<Rational>> {
            proptest::collection::vec(-3i64..=3, n).prop_map(|xs| xs.into_iter().map(int).collect())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn comul_is_multiplicative(x in element(8), y in element(8)) {
                let h = d4();
                prop_assert_eq!(h.comul(&h.mul(&x, &y)), h.tensor_mul(2, &h.comul(&x), &h.comul(&y)));
            }

            #[test]
            fn antipode_reverses_products(x in element(4), y in element(4)) {
                let h = pair_groupoid();
                prop_assert_eq!(h.s(&h.mul(&x, &y)), h.mul(&h.s(&y), &h.s(&x)));
            }

            #[test]
            fn counital_maps_are_idempotent(x in element(4)) {
                let h = pair_groupoid();
                let t = h.epsilon_t(&x);
                prop_assert_eq!(h.epsilon_t(&t), t.clone());
                prop_assert!(h.target_subalgebra().contains(&t));
                let s = h.epsilon_s(&x);
                prop_assert_eq!(h.epsilon_s(&s), s);
            }
        }
    }
}
