use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{axpy, zeros, LinearMap, Rational, SubspaceBasis};
use crate::qt::{canonical_r, QTStructure, WeakCocycle};
use crate::report::{expect_eq, VerificationReport, Witness};
use crate::transmutation::centralizer;
use crate::weak_hopf::QuantumGroupoid;

use super::pair::TwistedPair;

/// `α : C_H(H_s)_F → C_{H̃}(H̃_s)` and its inverse, in canonical carrier
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaMaps {
    pub source: SubspaceBasis,
    pub target: SubspaceBasis,
    pub alpha: LinearMap,
    pub alpha_inv: LinearMap,
}

/// `Σ_pq x_pq e_p · a · g(e_q)` for an ambient vector `a`.
fn sandwich_sum(
    h: &QuantumGroupoid,
    x: &[Rational],
    a: &[Rational],
    inner: impl Fn(usize) -> Vec<Rational>,
    outer: impl Fn(usize) -> Vec<Rational>,
) -> Vec<Rational> {
    let n = h.dim();
    let mut out = zeros(n);
    for (pq, c) in x.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, c, &h.mul(&h.mul(&inner(pq / n), a), &outer(pq % n)));
        }
    }
    out
}

/// `α(a) = Ad_{F¹}(a)F²`, ambient.
pub fn alpha_ambient(h: &QuantumGroupoid, wc: &WeakCocycle, a: &[Rational]) -> Vec<Rational> {
    let n = h.dim();
    let mut out = zeros(n);
    for (pq, c) in wc.f().iter().enumerate() {
        if !c.is_zero() {
            let ad = h.adjoint(&h.basis_vec(pq / n)).apply(a);
            axpy(&mut out, c, &h.mul(&ad, &h.basis_vec(pq % n)));
        }
    }
    out
}

/// `α(a) = F^{-(1)} a S(F^{-(2)}) v⁻¹`, ambient.
pub fn alpha_alternative(h: &QuantumGroupoid, wc: &WeakCocycle, v_inv: &[Rational], a: &[Rational]) -> Vec<Rational> {
    let x = sandwich_sum(h, wc.f_inv(), a, |p| h.basis_vec(p), |q| h.s(&h.basis_vec(q)));
    h.mul(&x, v_inv)
}

/// `α⁻¹(a) = F¹ a v S(F²)`, ambient.
pub fn alpha_inverse_ambient(h: &QuantumGroupoid, wc: &WeakCocycle, v: &[Rational], a: &[Rational]) -> Vec<Rational> {
    sandwich_sum(h, wc.f(), &h.mul(a, v), |p| h.basis_vec(p), |q| h.s(&h.basis_vec(q)))
}

pub(crate) fn require_canonical(h: &QuantumGroupoid, qt: &QTStructure) -> Result<(), Error> {
    let canonical = canonical_r(h)?;
    if canonical.r() != qt.r() {
        return Err(Error::PreconditionUnmet("R is not Δcop(1)Δ(1)".into()));
    }
    Ok(())
}

/// Requires `H` cocommutative and `R = Δcop(1)Δ(1)`.
pub fn alpha_map(pair: &TwistedPair) -> Result<AlphaMaps, Error> {
    let h = &pair.original;
    require_canonical(h, &pair.original_qt)?;
    let wc = &pair.cocycle;
    let source = centralizer(h);
    let target = centralizer(&pair.twisted);
    if source.dim() != target.dim() {
        return Err(Error::CarrierMismatch);
    }
    let mut cols = Vec::with_capacity(source.dim());
    for a in source.vectors() {
        cols.push(target.coords(&alpha_ambient(h, wc, a)).ok_or(Error::CarrierMismatch)?);
    }
    let mut inv_cols = Vec::with_capacity(target.dim());
    for a in target.vectors() {
        inv_cols.push(source.coords(&alpha_inverse_ambient(h, wc, &pair.elements.v, a)).ok_or(Error::CarrierMismatch)?);
    }
    let alpha = LinearMap::from_columns(target.dim(), &cols);
    if alpha.rank() != target.dim() {
        return Err(Error::CarrierMismatch);
    }
    let alpha_inv = LinearMap::from_columns(source.dim(), &inv_cols);
    Ok(AlphaMaps { source, target, alpha, alpha_inv })
}

/// The alternative form of `α`, both composites with `α⁻¹`, and
/// `α(C_H(H_s)) = C_{H̃}(H̃_s)` as canonical subspaces.
pub fn check_alpha(pair: &TwistedPair, maps: &AlphaMaps) -> VerificationReport {
    let h = &pair.original;
    let wc = &pair.cocycle;
    let mut report = VerificationReport::new("alpha");
    report.check("alternative-form", || {
        for (k, a) in maps.source.vectors().iter().enumerate() {
            expect_eq(&[k], alpha_ambient(h, wc, a), alpha_alternative(h, wc, &pair.elements.v_inv, a))?;
        }
        Ok(())
    });
    let ident = |m: &LinearMap| -> Result<(), Witness> {
        let id = LinearMap::identity(m.rows());
        for j in 0..m.cols() {
            expect_eq(&[j], m.column(j), id.column(j))?;
        }
        Ok(())
    };
    report.check("alpha-then-inverse", || ident(&maps.alpha_inv.compose(&maps.alpha)));
    report.check("inverse-then-alpha", || ident(&maps.alpha.compose(&maps.alpha_inv)));
    report.check("carrier-image", || {
        let image = maps.target.inclusion().compose(&maps.alpha).image();
        if image == maps.target {
            Ok(())
        } else {
            Err(Witness::new(&[image.dim(), maps.target.dim()], Vec::new(), Vec::new()))
        }
    });
    report
}
