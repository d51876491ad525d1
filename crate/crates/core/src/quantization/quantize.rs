use alloc::vec::Vec;

use num_traits::Zero;

use crate::category::{restrict, HModule};
use crate::error::Error;
use crate::linalg::tensor::apply_each;
use crate::linalg::{axpy, zeros, LinearMap, Rational};
use crate::qt::WeakCocycle;
use crate::transmutation::{centralizer, coords_or, tensor_coords_or, BraidedHopfPresentation};
use crate::weak_hopf::QuantumGroupoid;

/// `Σ x_pq Ad_{e_p} ⊗ Ad_{e_q}` applied to `y ∈ H ⊗ H`.
fn ad2(ad: &[LinearMap], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = ad.len();
    let mut out = zeros(n * n);
    for (pq, c) in x.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, c, &apply_each(y, &[n, n], &[&ad[pq / n], &ad[pq % n]]));
        }
    }
    out
}

/// `C_H(H_s)` with the adjoint action and the `F`-twisted structure maps:
///
/// - `a ·_F b = Ad_{F¹}(a) Ad_{F²}(b)`, `η_F(x) = x`
/// - `Δ_F(a) = Ad_{F^{-(1)}}(a_1) ⊗ Ad_{F^{-(2)}}(a_2)`
/// - `ε_F = ε_t`, `S_F = S`
pub fn quantize(h: &QuantumGroupoid, wc: &WeakCocycle) -> Result<BraidedHopfPresentation, Error> {
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let n = h.dim();
    let carrier = centralizer(h);
    let target = h.target_subalgebra();
    let ad: Vec<LinearMap> = (0..n).map(|i| h.adjoint(&h.basis_vec(i))).collect();
    let action = ad.iter().map(|a| restrict(a, &carrier, "action")).collect::<Result<Vec<_>, _>>()?;
    let module = HModule::new("carrier", h.name(), carrier.dim(), action)?;

    let basis = carrier.vectors();
    let c = basis.len();
    let mut mul_cols = Vec::with_capacity(c * c);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let twisted = ad2(&ad, wc.f(), &crate::linalg::tensor::outer(a, b));
            let prod = h.mul_map().apply(&twisted);
            mul_cols.push(coords_or(&carrier, &prod, "mul", i * c + j)?);
        }
    }
    let unit_cols = target
        .vectors()
        .iter()
        .enumerate()
        .map(|(k, x)| coords_or(&carrier, x, "unit", k))
        .collect::<Result<Vec<_>, _>>()?;

    let mut comul_cols = Vec::with_capacity(c);
    let mut counit_cols = Vec::with_capacity(c);
    let mut antipode_cols = Vec::with_capacity(c);
    for (k, a) in basis.iter().enumerate() {
        comul_cols.push(tensor_coords_or(&carrier, &ad2(&ad, wc.f_inv(), &h.comul(a)), "comul", k)?);
        counit_cols.push(coords_or(&target, &h.epsilon_t(a), "counit", k)?);
        antipode_cols.push(coords_or(&carrier, &h.s(a), "antipode", k)?);
    }
    let target_one = coords_or(&target, h.unit(), "unit", 0)?;
    Ok(BraidedHopfPresentation {
        ambient: h.clone(),
        mul: LinearMap::from_columns(c, &mul_cols),
        unit: LinearMap::from_columns(c, &unit_cols),
        comul: LinearMap::from_columns(c * c, &comul_cols),
        counit: LinearMap::from_columns(target.dim(), &counit_cols),
        antipode: LinearMap::from_columns(c, &antipode_cols),
        carrier,
        target,
        target_one,
        module,
    })
}
