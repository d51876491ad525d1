use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{one, zeros};
use crate::qt::{canonical_r, QTStructure, WeakCocycle};
use crate::weak_hopf::QuantumGroupoid;

use super::bicharacter::{bicharacter_cocycle, klein_beta, mixed_klein_beta, z2_beta};
use super::direct_sum::{direct_sum, direct_sum_cocycle, direct_sum_qt};
use super::groups::{d4, d4_index, diagonal_n, pair_groupoid, v4, z2};

/// A builtin instance: a quantum groupoid with a quasitriangular structure
/// and a weak cocycle.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub summary: &'static str,
    pub algebra: QuantumGroupoid,
    pub qt: QTStructure,
    pub cocycle: WeakCocycle,
}

fn fixture(name: &str, summary: &'static str, algebra: QuantumGroupoid, cocycle: WeakCocycle) -> Fixture {
    let qt = canonical_r(&algebra).expect("builtin fixtures are cocommutative");
    Fixture { name: name.into(), summary, algebra, qt, cocycle }
}

/// `F = e1 ⊗ e1 + e2 ⊗ e2` on N.
pub fn n_diagonal_element2() -> Vec<crate::linalg::Rational> {
    let mut f = zeros(4);
    f[0] = one();
    f[3] = one();
    f
}

pub fn n_fixture() -> Fixture {
    let f = n_diagonal_element2();
    fixture("N", "diagonal 2x2 matrices, R = F = e1⊗e1 + e2⊗e2", diagonal_n(), WeakCocycle::new(f.clone(), f))
}

pub fn z2_fixture() -> Fixture {
    let h = z2();
    let f = bicharacter_cocycle(&h, &[1], &z2_beta()).expect("sign bicharacter on Z2");
    fixture("kZ2", "group algebra of Z2 with the sign bicharacter twist", h, f)
}

pub fn pair_fixture() -> Fixture {
    let h = pair_groupoid();
    let f = WeakCocycle::trivial(&h);
    fixture("pair2", "pair groupoid on two objects, trivial cocycle", h, f)
}

/// Klein subgroup `{1, r2, s, r2s}` of D4 with generators `r2`, `s`.
pub fn d4_klein_generators() -> [usize; 2] {
    [d4_index(2, 0), d4_index(0, 1)]
}

pub fn d4_fixture() -> Fixture {
    let h = d4();
    let f = bicharacter_cocycle(&h, &d4_klein_generators(), &klein_beta()).expect("Klein bicharacter on D4");
    fixture("kD4", "dihedral group algebra with the Klein-subgroup bicharacter twist", h, f)
}

/// The same Klein subgroup with `β = (-1)^{(a+b)d}`, which is nontrivial on
/// the characters that survive the adjoint action.
pub fn d4_mixed_fixture() -> Fixture {
    let h = d4();
    let f =
        bicharacter_cocycle(&h, &d4_klein_generators(), &mixed_klein_beta()).expect("mixed Klein bicharacter on D4");
    fixture("kD4-mixed", "dihedral group algebra with a Klein bicharacter that changes the product", h, f)
}

pub fn v4_fixture() -> Fixture {
    let h = v4();
    let f = bicharacter_cocycle(&h, &[1, 2], &klein_beta()).expect("bicharacter on V4");
    fixture("kV4", "Klein four-group algebra with a bicharacter twist", h, f)
}

pub fn n_plus_z2_fixture() -> Fixture {
    let (a, b) = (n_fixture(), z2_fixture());
    sum_fixture("N+kZ2", "N ⊕ kZ2 with the block cocycle", &a, &b)
}

pub fn d4_plus_n_fixture() -> Fixture {
    let a = d4_fixture();
    let n = n_fixture();
    let b = Fixture { cocycle: WeakCocycle::trivial(&n.algebra), ..n };
    sum_fixture("kD4+N", "kD4 ⊕ N with the Klein bicharacter on the first block", &a, &b)
}

fn sum_fixture(name: &str, summary: &'static str, a: &Fixture, b: &Fixture) -> Fixture {
    let algebra = direct_sum(&a.algebra, &b.algebra).expect("direct sum of valid fixtures");
    let (na, nb) = (a.algebra.dim(), b.algebra.dim());
    let qt = direct_sum_qt(na, &a.qt, nb, &b.qt);
    let cocycle = direct_sum_cocycle(na, &a.cocycle, nb, &b.cocycle);
    let mut algebra = algebra;
    algebra.set_name(name);
    Fixture { name: name.into(), summary, algebra, qt, cocycle }
}

/// All builtin fixtures, sorted by name.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut all = alloc::vec![
        n_fixture(),
        z2_fixture(),
        pair_fixture(),
        d4_fixture(),
        d4_mixed_fixture(),
        v4_fixture(),
        n_plus_z2_fixture(),
        d4_plus_n_fixture(),
    ];
    all.sort_by(|a, b| a.name.cmp(&b.name));
    all
}

pub fn fixture_by_name(name: &str) -> Option<Fixture> {
    all_fixtures().into_iter().find(|f| f.name == name)
}
