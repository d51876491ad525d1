use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{axpy, zeros, Rational};
use crate::report::{expect_eq, VerificationReport};
use crate::weak_hopf::{QuantumGroupoid, WeakBialgebra};

use super::inverse::solve_weak_inverse;

/// A weak invertible unit 2-cocycle `F ∈ Δ(1)(H⊗H)Δ^cop(1)` together with
/// `F⁻¹ ∈ Δ^cop(1)(H⊗H)Δ(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakCocycle {
    f: Vec<Rational>,
    f_inv: Vec<Rational>,
}

impl WeakCocycle {
    pub fn new(f: Vec<Rational>, f_inv: Vec<Rational>) -> Self {
        Self { f, f_inv }
    }

    /// Solves for `F⁻¹` inside `Δ^cop(1)(H⊗H)Δ(1)`.
    pub fn with_solved_inverse(h: &WeakBialgebra, f: Vec<Rational>) -> Result<Self, Error> {
        let d1 = h.delta_one();
        let d1c = h.delta_one_cop();
        let f_inv = solve_weak_inverse(h, &f, &d1c, &d1, &d1, &d1c, "F")?;
        Ok(Self { f, f_inv })
    }

    /// `F = Δ(1)`, a cocycle whenever `H` is cocommutative.
    pub fn trivial(h: &WeakBialgebra) -> Self {
        let d1 = h.delta_one();
        Self { f: d1.clone(), f_inv: d1 }
    }

    pub fn f(&self) -> &[Rational] {
        &self.f
    }

    pub fn f_inv(&self) -> &[Rational] {
        &self.f_inv
    }
}

pub fn check_weak_cocycle(h: &QuantumGroupoid, wc: &WeakCocycle) -> VerificationReport {
    let (f, fi) = (wc.f(), wc.f_inv());
    let m2 = |x: &[Rational], y: &[Rational]| h.tensor_mul(2, x, y);
    let m3 = |x: &[Rational], y: &[Rational]| h.tensor_mul(3, x, y);
    let left = |x: &[Rational]| h.legs(x, &[0], 2);
    let right = |x: &[Rational]| h.legs(x, &[1], 2);
    let d1 = h.delta_one();
    let d1c = h.delta_one_cop();
    let s_inv = h.antipode_inverse();
    let mut report = VerificationReport::new("weak-cocycle");

    report.check("f-membership", || expect_eq(&[], m2(&m2(&d1, f), &d1c), f.to_vec()));
    report.check("f-inverse-membership", || expect_eq(&[], m2(&m2(&d1c, fi), &d1), fi.to_vec()));
    report.check("f-finv", || expect_eq(&[], m2(f, fi), d1.clone()));
    report.check("finv-f", || expect_eq(&[], m2(fi, f), d1c.clone()));

    let f12 = h.legs(f, &[0, 1], 3);
    let f23 = h.legs(f, &[1, 2], 3);
    let fi12 = h.legs(fi, &[0, 1], 3);
    let fi23 = h.legs(fi, &[1, 2], 3);
    let delta_id = |x: &[Rational]| h.comul_at(x, 2, 0);
    let id_delta = |x: &[Rational]| h.comul_at(x, 2, 1);
    report.check("cocycle", || expect_eq(&[], m3(&delta_id(f), &f12), m3(&id_delta(f), &f23)));

    let ht = h.target_subalgebra();
    let hs = h.source_subalgebra();
    let over = |basis: &[Vec<Rational>], g: &dyn Fn(&[Rational]) -> (Vec<Rational>, Vec<Rational>)| {
        for (k, x) in basis.iter().enumerate() {
            let (a, b) = g(x);
            expect_eq(&[k], a, b)?;
        }
        Ok(())
    };
    report.check("(1⊗y)F=F(y⊗1)", || over(hs.vectors(), &|y| (m2(&right(y), f), m2(f, &left(y)))));
    report.check("(z⊗1)F=F(1⊗z)", || over(ht.vectors(), &|z| (m2(&left(z), f), m2(f, &right(z)))));
    report.check("F^-1(1⊗y)=(y⊗1)F^-1", || over(hs.vectors(), &|y| (m2(fi, &right(y)), m2(&left(y), fi))));
    report.check("F^-1(z⊗1)=(1⊗z)F^-1", || over(ht.vectors(), &|z| (m2(fi, &left(z)), m2(&right(z), fi))));
    report.check("(1⊗y)F^-1=(S^-1(y)⊗1)F^-1", || {
        over(hs.vectors(), &|y| (m2(&right(y), fi), m2(&left(&s_inv.apply(y)), fi)))
    });
    report.check("F(z⊗1)=F(1⊗S^-1(z))", || {
        over(ht.vectors(), &|z| (m2(f, &left(z)), m2(f, &right(&s_inv.apply(z)))))
    });

    report.check("cocycle-form-1", || expect_eq(&[], m3(&f23, &fi12), m3(&id_delta(fi), &delta_id(f))));
    report.check("cocycle-form-2", || expect_eq(&[], m3(&f12, &fi23), m3(&delta_id(fi), &id_delta(f))));
    report.check("cocycle-form-3", || expect_eq(&[], m3(&fi23, &id_delta(fi)), m3(&fi12, &delta_id(fi))));
    report
}

/// `v = F^{-(1)}S(F^{-(2)})` and `v⁻¹ = S(F^{(1)})F^{(2)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistElements {
    pub v: Vec<Rational>,
    pub v_inv: Vec<Rational>,
}

pub fn twist_elements(h: &QuantumGroupoid, wc: &WeakCocycle) -> TwistElements {
    let n = h.dim();
    let s = h.antipode();
    let mut v = zeros(n);
    let mut v_inv = zeros(n);
    for ab in 0..n * n {
        let (a, b) = (ab / n, ab % n);
        let c = &wc.f_inv()[ab];
        if *c != Rational::default() {
            axpy(&mut v, c, &h.mul(&h.basis_vec(a), &s.column(b)));
        }
        let c = &wc.f()[ab];
        if *c != Rational::default() {
            axpy(&mut v_inv, c, &h.mul(&s.column(a), &h.basis_vec(b)));
        }
    }
    TwistElements { v, v_inv }
}

/// `H` with `Δ̃(h) = F⁻¹Δ(h)F` and `S̃(h) = v S(h) v⁻¹`; multiplication,
/// unit and counit are unchanged.
pub fn twisted_algebra(h: &QuantumGroupoid, wc: &WeakCocycle) -> Result<QuantumGroupoid, Error> {
    let n = h.dim();
    let mut comul = zeros(n * n * n);
    for i in 0..n {
        let d = h.tensor_mul(2, &h.tensor_mul(2, wc.f_inv(), &h.comul(&h.basis_vec(i))), wc.f());
        comul[i * n * n..(i + 1) * n * n].clone_from_slice(&d);
    }
    let base = h.with_comul(alloc::format!("{}~", h.name()), comul)?;
    let tw = twist_elements(h, wc);
    let s = h.left_mul(&tw.v).compose(&h.right_mul(&tw.v_inv)).compose(h.antipode());
    QuantumGroupoid::new(base, s)
}
