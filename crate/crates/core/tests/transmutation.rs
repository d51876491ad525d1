use weakhopf_core::category::ModuleCategory;
use weakhopf_core::linalg::tensor::outer;
use weakhopf_core::linalg::{int, LinearMap, SubspaceBasis};
use weakhopf_core::qt::canonical_r;
use weakhopf_core::transmutation::{
    centralizer, check_morphism, self_transmute, transmute, verify_braided_hopf, QGMorphism,
};
use weakhopf_core::zoo::{all_fixtures, d4_fixture, n_fixture, pair_fixture, v4, z2_fixture};
use weakhopf_core::{Error, VerificationReport};

fn assert_passes(name: &str, report: &VerificationReport) {
    let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
    assert!(failed.is_empty(), "{name}: {} failed {:?}", report.suite, failed);
}

fn swap2() -> LinearMap {
    LinearMap::from_rows(&[vec![int(0), int(1)], vec![int(1), int(0)]])
}

#[test]
fn self_transmutation_is_braided_hopf_for_every_fixture() {
    for fx in all_fixtures() {
        let p = self_transmute(&fx.algebra, &fx.qt).unwrap();
        let ctx = ModuleCategory::psi(&fx.algebra, &fx.qt);
        assert_passes(&fx.name, &verify_braided_hopf(&p, &ctx));
        assert!(p.counit.compose(&p.unit).is_identity(), "{}", fx.name);
    }
}

#[test]
fn diagonal_algebra_transmutes_to_itself() {
    let fx = n_fixture();
    let p = self_transmute(&fx.algebra, &fx.qt).unwrap();
    assert_eq!(p.carrier_dim(), 2);
    assert_eq!(p.target_dim(), 2);
    for i in 0..2 {
        let e = p.carrier.coords(&fx.algebra.basis_vec(i)).unwrap();
        assert_eq!(p.comul.apply(&e), outer(&e, &e));
        assert_eq!(p.antipode.apply(&e), e);
        let t = p.target.coords(&fx.algebra.basis_vec(i)).unwrap();
        assert_eq!(p.counit.apply(&e), t);
    }
}

#[test]
fn centralizer_examples() {
    let n = n_fixture().algebra;
    assert_eq!(centralizer(&n), SubspaceBasis::whole(2));
    let d4 = d4_fixture().algebra;
    assert_eq!(centralizer(&d4), SubspaceBasis::whole(8));
    let pair = pair_fixture().algebra;
    let diag = SubspaceBasis::span(4, vec![pair.basis_vec(0), pair.basis_vec(3)]);
    assert_eq!(centralizer(&pair), diag);
    for fx in all_fixtures() {
        let c = centralizer(&fx.algebra);
        assert!(c.contains(fx.algebra.unit()), "{}", fx.name);
        assert!(fx.algebra.target_subalgebra().is_subspace_of(&c), "{}", fx.name);
    }
}

#[test]
fn morphism_checks() {
    let n = n_fixture().algebra;
    assert!(check_morphism(&QGMorphism::identity(&n)).passes());
    assert!(check_morphism(&QGMorphism::identity(&d4_fixture().algebra)).passes());
    let swap = QGMorphism { source: n.clone(), target: n.clone(), matrix: swap2() };
    assert!(check_morphism(&swap).passes());
    let collapse = LinearMap::from_rows(&[vec![int(1), int(1)], vec![int(0), int(0)]]);
    let bad = QGMorphism { source: n.clone(), target: n, matrix: collapse };
    let report = check_morphism(&bad);
    assert!(!report.get("f-multiplicative").unwrap().passed);
}

#[test]
fn transmutation_along_an_automorphism() {
    let fx = n_fixture();
    let swap = QGMorphism { source: fx.algebra.clone(), target: fx.algebra.clone(), matrix: swap2() };
    let p = transmute(&fx.algebra, &fx.qt, &swap).unwrap();
    assert_passes("N swap", &verify_braided_hopf(&p, &ModuleCategory::psi(&fx.algebra, &fx.qt)));
}

#[test]
fn transmutation_into_a_larger_algebra() {
    // Z2 → Z2 × Z2, g ↦ a
    let fx = z2_fixture();
    let l = v4();
    let f = LinearMap::from_fn(4, 2, |r, c| if r == c { int(1) } else { int(0) });
    let m = QGMorphism { source: fx.algebra.clone(), target: l, matrix: f };
    assert!(check_morphism(&m).passes());
    let p = transmute(&fx.algebra, &fx.qt, &m).unwrap();
    assert_eq!(p.carrier_dim(), 4);
    assert_passes("kZ2 → kV4", &verify_braided_hopf(&p, &ModuleCategory::psi(&fx.algebra, &fx.qt)));

    // diagonal into the pair groupoid, e_i ↦ e_ii
    let n = n_fixture();
    let pair = pair_fixture().algebra;
    let f = LinearMap::from_fn(4, 2, |r, c| if r == 3 * c { int(1) } else { int(0) });
    let m = QGMorphism { source: n.algebra.clone(), target: pair, matrix: f };
    assert!(check_morphism(&m).passes());
    let p = transmute(&n.algebra, &n.qt, &m).unwrap();
    assert_eq!(p.carrier_dim(), 2);
    assert_passes("N → pair2", &verify_braided_hopf(&p, &ModuleCategory::psi(&n.algebra, &n.qt)));
}

#[test]
fn trivial_r_recovers_the_ordinary_hopf_structure_of_d4() {
    let fx = d4_fixture();
    let h = &fx.algebra;
    assert_eq!(fx.qt, canonical_r(h).unwrap());
    let p = self_transmute(h, &fx.qt).unwrap();
    let incl = p.carrier.inclusion();
    let coords = p.carrier.coordinate_map();
    assert_eq!(incl.compose(&p.mul).compose(&coords.kron(&coords)), h.mul_map());
    assert_eq!(incl.kron(&incl).compose(&p.comul).compose(&coords), h.comul_map());
    assert_eq!(incl.compose(&p.antipode).compose(&coords), *h.antipode());
    // H_t = k·1, so ε_R(l) = ε(l)·1
    assert_eq!(p.target_dim(), 1);
    assert_eq!(p.counit.compose(&coords), h.counit_map());
    assert_eq!(incl.compose(&p.unit).column(0), h.unit().to_vec());
}

#[test]
fn pair_groupoid_diagonal_is_grouplike() {
    let fx = pair_fixture();
    let p = self_transmute(&fx.algebra, &fx.qt).unwrap();
    for i in [0usize, 3] {
        let e = p.carrier.coords(&fx.algebra.basis_vec(i)).unwrap();
        assert_eq!(p.comul.apply(&e), outer(&e, &e));
    }
}

#[test]
fn inconsistent_morphism_is_a_closure_violation() {
    // e_i ↦ e_12 is not an algebra map; the induced action leaves the diagonal
    let n = n_fixture();
    let pair = pair_fixture().algebra;
    let f = LinearMap::from_fn(4, 2, |r, _| if r == 1 { int(1) } else { int(0) });
    let m = QGMorphism { source: n.algebra.clone(), target: pair, matrix: f };
    assert!(!check_morphism(&m).passes());
    let err = transmute(&n.algebra, &n.qt, &m).unwrap_err();
    assert!(matches!(err, Error::ClosureViolation { .. }), "{err:?}");
}
