use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{zeros, LinearMap, Rational};
use crate::qt::{QTStructure, WeakCocycle};
use crate::weak_hopf::{QuantumGroupoid, WeakBialgebra};

/// Block-diagonal direct sum `A ⊕ B`. Basis names are kept unless they
/// collide, in which case the colliding ones are prefixed by their
/// algebra's name.
pub fn direct_sum(a: &QuantumGroupoid, b: &QuantumGroupoid) -> Result<QuantumGroupoid, Error> {
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let clash = |x: &String, other: &[String]| other.contains(x);
    let mut basis: Vec<String> = Vec::with_capacity(n);
    for x in a.basis_names() {
        basis.push(if clash(x, b.basis_names()) { format!("{}.{}", a.name(), x) } else { x.clone() });
    }
    for x in b.basis_names() {
        basis.push(if clash(x, a.basis_names()) { format!("{}.{}", b.name(), x) } else { x.clone() });
    }
    let mut mul = zeros(n * n * n);
    let mut comul = zeros(n * n * n);
    for (alg, off) in [(a, 0usize), (b, na)] {
        let m = alg.dim();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let at = ((i + off) * n + j + off) * n + k + off;
                    mul[at] = alg.mul_tensor()[(i * m + j) * m + k].clone();
                    comul[at] = alg.comul_tensor()[(i * m + j) * m + k].clone();
                }
            }
        }
    }
    let concat = |x: &[Rational], y: &[Rational]| x.iter().chain(y).cloned().collect::<Vec<_>>();
    let unit = concat(a.unit(), b.unit());
    let counit = concat(a.counit_vector(), b.counit_vector());
    let name = format!("{}+{}", a.name(), b.name());
    let base = WeakBialgebra::new(name, basis, mul, unit, comul, counit)?;
    let s = LinearMap::from_fn(n, n, |r, c| match (r < na, c < na) {
        (true, true) => a.antipode().get(r, c).clone(),
        (false, false) => b.antipode().get(r - na, c - na).clone(),
        _ => Rational::default(),
    });
    QuantumGroupoid::new(base, s)
}

/// Embeds `x ∈ A⊗A` and `y ∈ B⊗B` block-diagonally in `(A⊕B)⊗(A⊕B)`.
pub fn block_element2(na: usize, x: &[Rational], nb: usize, y: &[Rational]) -> Vec<Rational> {
    let n = na + nb;
    let mut out = zeros(n * n);
    for (block, m, off) in [(x, na, 0usize), (y, nb, na)] {
        for ij in 0..m * m {
            out[(ij / m + off) * n + ij % m + off] = block[ij].clone();
        }
    }
    out
}

pub fn direct_sum_qt(na: usize, a: &QTStructure, nb: usize, b: &QTStructure) -> QTStructure {
    QTStructure::new(block_element2(na, a.r(), nb, b.r()), block_element2(na, a.r_inv(), nb, b.r_inv()))
}

pub fn direct_sum_cocycle(na: usize, a: &WeakCocycle, nb: usize, b: &WeakCocycle) -> WeakCocycle {
    WeakCocycle::new(block_element2(na, a.f(), nb, b.f()), block_element2(na, a.f_inv(), nb, b.f_inv()))
}
