use alloc::vec::Vec;

use num_traits::Zero;

use crate::category::{restrict, HModule};
use crate::error::Error;
use crate::linalg::{axpy, zeros, LinearMap, Rational, SubspaceBasis};
use crate::qt::QTStructure;
use crate::weak_hopf::QuantumGroupoid;

use super::centralizer::centralizer;
use super::morphism::QGMorphism;
use super::presentation::BraidedHopfPresentation;

/// Ambient operator `l ↦ f(h_1) l f(S(h_2))` on `L`.
fn induced_action(f: &QGMorphism, h_elem: &[Rational]) -> LinearMap {
    let (h, l, m) = (&f.source, &f.target, &f.matrix);
    let n = h.dim();
    let d = h.comul(h_elem);
    let mut op = LinearMap::zeros(l.dim(), l.dim());
    for (pq, c) in d.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let left = l.left_mul(&m.column(pq / n));
        let right = l.right_mul(&m.apply(&h.antipode().column(pq % n)));
        op.add_scaled(c, &left.compose(&right));
    }
    op
}

pub(crate) fn coords_or(
    sub: &SubspaceBasis,
    v: &[Rational],
    map: &'static str,
    index: usize,
) -> Result<Vec<Rational>, Error> {
    sub.coords(v).ok_or(Error::ClosureViolation { map, index })
}

pub(crate) fn tensor_coords_or(
    sub: &SubspaceBasis,
    v: &[Rational],
    map: &'static str,
    index: usize,
) -> Result<Vec<Rational>, Error> {
    sub.tensor_coords(sub, v).ok_or(Error::ClosureViolation { map, index })
}

/// Builds `C_L(L_s)` as a Hopf algebra in the category of `H`-modules:
///
/// - `h · l = f(h_1) l f(S(h_2))`
/// - `μ(a ⊗ b) = ab`, `η(x) = f(x)`
/// - `Δ(l) = l_1 f(S(R²)) ⊗ R¹ · l_2`
/// - `ε(l) = ε_L(f(1_1) l) 1_2`
/// - `S(l) = f(R²) S_L(R¹ · l)`
pub fn transmute(h: &QuantumGroupoid, qt: &QTStructure, f: &QGMorphism) -> Result<BraidedHopfPresentation, Error> {
    let l = &f.target;
    let (n, nl) = (h.dim(), l.dim());
    let m = &f.matrix;
    let carrier = centralizer(l);
    let c = carrier.dim();
    let target = h.target_subalgebra();

    let ambient_action: Vec<LinearMap> = (0..n).map(|i| induced_action(f, &h.basis_vec(i))).collect();
    let mut action = Vec::with_capacity(n);
    for a in &ambient_action {
        action.push(restrict(a, &carrier, "action")?);
    }
    let module = HModule::new("carrier", h.name(), c, action)?;
    let act = |x: &[Rational]| -> LinearMap {
        let mut op = LinearMap::zeros(nl, nl);
        for (k, coef) in x.iter().enumerate() {
            if !coef.is_zero() {
                op.add_scaled(coef, &ambient_action[k]);
            }
        }
        op
    };

    let basis = carrier.vectors();
    let mut mul_cols = Vec::with_capacity(c * c);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            mul_cols.push(coords_or(&carrier, &l.mul(a, b), "mul", i * c + j)?);
        }
    }
    let mul = LinearMap::from_columns(c, &mul_cols);

    let mut unit_cols = Vec::with_capacity(target.dim());
    for (k, x) in target.vectors().iter().enumerate() {
        unit_cols.push(coords_or(&carrier, &m.apply(x), "unit", k)?);
    }
    let unit = LinearMap::from_columns(c, &unit_cols);

    let r = qt.r();
    let d1 = h.delta_one();
    let s = h.antipode();
    let mut comul_cols = Vec::with_capacity(c);
    let mut counit_cols = Vec::with_capacity(c);
    let mut antipode_cols = Vec::with_capacity(c);
    for (k, x) in basis.iter().enumerate() {
        let dx = l.comul(x);
        let mut out = zeros(nl * nl);
        let mut sx = zeros(nl);
        for (ab, coef) in r.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (ra, rb) = (h.basis_vec(ab / n), h.basis_vec(ab % n));
            let left = l.right_mul(&m.apply(&s.apply(&rb)));
            let right = act(&ra);
            let term = crate::linalg::tensor::apply_each(&dx, &[nl, nl], &[&left, &right]);
            axpy(&mut out, coef, &term);
            let moved = l.s(&right.apply(x));
            axpy(&mut sx, coef, &l.mul(&m.apply(&rb), &moved));
        }
        comul_cols.push(tensor_coords_or(&carrier, &out, "comul", k)?);
        antipode_cols.push(coords_or(&carrier, &sx, "antipode", k)?);

        let mut eps = zeros(n);
        for (pq, coef) in d1.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let w = l.counit(&l.mul(&m.column(pq / n), x));
            axpy(&mut eps, &(coef * w), &h.basis_vec(pq % n));
        }
        counit_cols.push(coords_or(&target, &eps, "counit", k)?);
    }
    let comul = LinearMap::from_columns(c * c, &comul_cols);
    let counit = LinearMap::from_columns(target.dim(), &counit_cols);
    let antipode = LinearMap::from_columns(c, &antipode_cols);
    let target_one = target.coords(h.unit()).ok_or(Error::ClosureViolation { map: "unit", index: 0 })?;
    Ok(BraidedHopfPresentation {
        ambient: l.clone(),
        carrier,
        target,
        target_one,
        module,
        mul,
        unit,
        comul,
        counit,
        antipode,
    })
}

/// [`transmute`] with `L = H` and `f = id`.
pub fn self_transmute(h: &QuantumGroupoid, qt: &QTStructure) -> Result<BraidedHopfPresentation, Error> {
    transmute(h, qt, &QGMorphism::identity(h))
}
