use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{LinearMap, Rational};
use crate::report::{expect_eq, VerificationReport};
use crate::weak_hopf::{QuantumGroupoid, WeakBialgebra};

use super::inverse::solve_weak_inverse;

/// A quasitriangular structure: `R ∈ Δ^cop(1)(H⊗H)Δ(1)` and its weak
/// inverse `R⁻¹ ∈ Δ(1)(H⊗H)Δ^cop(1)`, both as `dim²` coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTStructure {
    r: Vec<Rational>,
    r_inv: Vec<Rational>,
}

impl QTStructure {
    pub fn new(r: Vec<Rational>, r_inv: Vec<Rational>) -> Self {
        Self { r, r_inv }
    }

    /// Solves for `R⁻¹` inside `Δ(1)(H⊗H)Δ^cop(1)`.
    pub fn with_solved_inverse(h: &WeakBialgebra, r: Vec<Rational>) -> Result<Self, Error> {
        let d1 = h.delta_one();
        let d1c = h.delta_one_cop();
        let r_inv = solve_weak_inverse(h, &r, &d1, &d1c, &d1c, &d1, "R")?;
        Ok(Self { r, r_inv })
    }

    pub fn r(&self) -> &[Rational] {
        &self.r
    }

    pub fn r_inv(&self) -> &[Rational] {
        &self.r_inv
    }
}

/// `R = Δ^cop(1)Δ(1)` with `R⁻¹ = Δ(1)Δ^cop(1)`, for cocommutative `H`.
pub fn canonical_r(h: &WeakBialgebra) -> Result<QTStructure, Error> {
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let d1 = h.delta_one();
    let d1c = h.delta_one_cop();
    Ok(QTStructure::new(h.tensor_mul(2, &d1c, &d1), h.tensor_mul(2, &d1, &d1c)))
}

pub fn check_quasitriangular(h: &QuantumGroupoid, qt: &QTStructure) -> VerificationReport {
    let n = h.dim();
    let (r, r_inv) = (qt.r(), qt.r_inv());
    let m2 = |x: &[Rational], y: &[Rational]| h.tensor_mul(2, x, y);
    let m3 = |x: &[Rational], y: &[Rational]| h.tensor_mul(3, x, y);
    let d1 = h.delta_one();
    let d1c = h.delta_one_cop();
    let mut report = VerificationReport::new("quasitriangular");

    report.check("r-membership", || expect_eq(&[], m2(&m2(&d1c, r), &d1), r.to_vec()));
    report.check("r-inverse-membership", || expect_eq(&[], m2(&m2(&d1, r_inv), &d1c), r_inv.to_vec()));

    let r13 = h.legs(r, &[0, 2], 3);
    let r12 = h.legs(r, &[0, 1], 3);
    let r23 = h.legs(r, &[1, 2], 3);
    report.check("id-delta-r", || expect_eq(&[], h.comul_at(r, 2, 1), m3(&r13, &r12)));
    report.check("delta-id-r", || expect_eq(&[], h.comul_at(r, 2, 0), m3(&r13, &r23)));

    report.check("intertwiner", || {
        for i in 0..n {
            let d = h.comul(&h.basis_vec(i));
            expect_eq(&[i], m2(&h.flip(&d), r), m2(r, &d))?;
        }
        Ok(())
    });

    report.check("r-rinv", || expect_eq(&[], m2(r, r_inv), d1c.clone()));
    report.check("rinv-r", || expect_eq(&[], m2(r_inv, r), d1.clone()));
    report
}

/// The identity list satisfied by every quasitriangular quantum groupoid,
/// with `y` ranging over a basis of `H_s` and `z` over a basis of `H_t`.
pub fn derived_r_identities(h: &QuantumGroupoid, qt: &QTStructure) -> VerificationReport {
    let (r, r_inv) = (qt.r(), qt.r_inv());
    let m2 = |x: &[Rational], y: &[Rational]| h.tensor_mul(2, x, y);
    let left = |x: &[Rational]| h.legs(x, &[0], 2);
    let right = |x: &[Rational]| h.legs(x, &[1], 2);
    let s = h.antipode();
    let s_inv = h.antipode_inverse();
    let ht = h.target_subalgebra();
    let hs = h.source_subalgebra();
    let mut report = VerificationReport::new("derived-r-identities");

    let over = |basis: &[Vec<Rational>], f: &dyn Fn(&[Rational]) -> (Vec<Rational>, Vec<Rational>)| {
        for (k, x) in basis.iter().enumerate() {
            let (a, b) = f(x);
            expect_eq(&[k], a, b)?;
        }
        Ok(())
    };

    report.check("(1⊗z)R=R(z⊗1)", || over(ht.vectors(), &|z| (m2(&right(z), r), m2(r, &left(z)))));
    report.check("(y⊗1)R=R(1⊗y)", || over(hs.vectors(), &|y| (m2(&left(y), r), m2(r, &right(y)))));
    report.check("(z⊗1)R=(1⊗S(z))R", || over(ht.vectors(), &|z| (m2(&left(z), r), m2(&right(&s.apply(z)), r))));
    report.check("(1⊗y)R=(S(y)⊗1)R", || over(hs.vectors(), &|y| (m2(&right(y), r), m2(&left(&s.apply(y)), r))));
    report.check("R(1⊗z)=R(S^-1(z)⊗1)", || {
        over(ht.vectors(), &|z| (m2(r, &right(z)), m2(r, &left(&s_inv.apply(z)))))
    });
    report.check("R(y⊗1)=R(1⊗S^-1(y))", || {
        over(hs.vectors(), &|y| (m2(r, &left(y)), m2(r, &right(&s_inv.apply(y)))))
    });

    let d1 = h.delta_one();
    let d1c = h.delta_one_cop();
    let es = h.epsilon_s_map();
    let et = h.epsilon_t_map();
    report.check("(eps_s⊗id)R=Δ(1)", || expect_eq(&[], h.map_at(r, 2, 0, &es), d1.clone()));
    report.check("(id⊗eps_s)R=(S⊗id)Δcop(1)", || expect_eq(&[], h.map_at(r, 2, 1, &es), h.map_at(&d1c, 2, 0, s)));
    report.check("(eps_t⊗id)R=Δcop(1)", || expect_eq(&[], h.map_at(r, 2, 0, &et), d1c.clone()));
    report.check("(id⊗eps_t)R=(S⊗id)Δ(1)", || expect_eq(&[], h.map_at(r, 2, 1, &et), h.map_at(&d1, 2, 0, s)));
    report.check("(S⊗id)R=R^-1", || expect_eq(&[], h.map_at(r, 2, 0, s), r_inv.to_vec()));
    report.check("(id⊗S^-1)R=R^-1", || expect_eq(&[], h.map_at(r, 2, 1, s_inv), r_inv.to_vec()));
    report.check("(S⊗S)R=R", || expect_eq(&[], h.map_at(&h.map_at(r, 2, 0, s), 2, 1, s), r.to_vec()));
    report
}

/// `u = S(R²)R¹` and `u⁻¹ = R²S²(R¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldElement {
    pub u: Vec<Rational>,
    pub u_inv: Vec<Rational>,
}

fn drinfeld_pair(h: &QuantumGroupoid, r: &[Rational]) -> DrinfeldElement {
    let n = h.dim();
    let s = h.antipode();
    let s2 = s.compose(s);
    let mut u = crate::linalg::zeros(n);
    let mut u_inv = crate::linalg::zeros(n);
    for (ab, c) in r.iter().enumerate() {
        if *c == Rational::default() {
            continue;
        }
        let (a, b) = (ab / n, ab % n);
        crate::linalg::axpy(&mut u, c, &h.mul(&s.column(b), &h.basis_vec(a)));
        crate::linalg::axpy(&mut u_inv, c, &h.mul(&h.basis_vec(b), &s2.column(a)));
    }
    DrinfeldElement { u, u_inv }
}

/// Computes `u`, `u⁻¹`, failing if they are not mutually inverse.
pub fn drinfeld_element(h: &QuantumGroupoid, qt: &QTStructure) -> Result<DrinfeldElement, Error> {
    let el = drinfeld_pair(h, qt.r());
    let one = h.unit();
    if h.mul(&el.u, &el.u_inv) != one || h.mul(&el.u_inv, &el.u) != one {
        return Err(Error::UNotInvertible);
    }
    Ok(el)
}

pub fn check_drinfeld_element(h: &QuantumGroupoid, qt: &QTStructure) -> VerificationReport {
    let n = h.dim();
    let el = drinfeld_pair(h, qt.r());
    let one = h.unit().to_vec();
    let mut report = VerificationReport::new("drinfeld-element");
    report.check("u*u^-1=1", || expect_eq(&[], h.mul(&el.u, &el.u_inv), one.clone()));
    report.check("u^-1*u=1", || expect_eq(&[], h.mul(&el.u_inv, &el.u), one.clone()));
    report.check("S^2=u(.)u^-1", || {
        let s = h.antipode();
        let s2 = s.compose(s);
        let conj: LinearMap = h.left_mul(&el.u).compose(&h.right_mul(&el.u_inv));
        for j in 0..n {
            expect_eq(&[j], s2.column(j), conj.column(j))?;
        }
        Ok(())
    });
    report.check("Δ(u)=R^-1 R21^-1 (u⊗u)", || {
        let r_inv = qt.r_inv();
        let rhs = h.tensor_mul(2, &h.tensor_mul(2, r_inv, &h.flip(r_inv)), &crate::linalg::tensor::outer(&el.u, &el.u));
        expect_eq(&[], h.comul(&el.u), rhs)
    });
    report.observe("u", el.u);
    report.observe("u^-1", el.u_inv);
    report
}
