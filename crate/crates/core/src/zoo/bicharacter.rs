use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{frac, int, tensor::outer, zeros, Rational};
use crate::qt::WeakCocycle;
use crate::weak_hopf::QuantumGroupoid;

/// Twist `F = Σ β(χ, ψ) e_χ ⊗ e_ψ` over an elementary abelian 2-subgroup
/// `A` of a group algebra, where `e_χ` are the character idempotents of `A`.
///
/// `generators` are basis indices of commuting involutions generating `A`
/// (one or two of them). Characters and subgroup elements are indexed by
/// bit masks with generator `t` on bit `k-1-t`, so for two generators
/// `χ_{ab}` sits at index `2a + b`. `beta` is indexed the same way.
pub fn bicharacter_cocycle(h: &QuantumGroupoid, generators: &[usize], beta: &[Vec<i64>]) -> Result<WeakCocycle, Error> {
    let n = h.dim();
    let k = generators.len();
    if k == 0 || k > 2 {
        return Err(Error::InvalidSubgroup(format!("expected 1 or 2 generators, got {k}")));
    }
    let one = h.unit().to_vec();
    if h.delta_one() != outer(&one, &one) {
        return Err(Error::InvalidSubgroup("algebra is not an ordinary group algebra".to_string()));
    }
    let size = 1usize << k;
    let mut elements: Vec<Vec<Rational>> = Vec::with_capacity(size);
    for mask in 0..size {
        let mut g = one.clone();
        for (t, &gen) in generators.iter().enumerate() {
            if gen >= n {
                return Err(Error::InvalidSubgroup(format!("generator index {gen} out of range")));
            }
            if mask >> (k - 1 - t) & 1 == 1 {
                g = h.mul(&g, &h.basis_vec(gen));
            }
        }
        elements.push(g);
    }
    for &g in generators {
        let x = h.basis_vec(g);
        if h.mul(&x, &x) != one {
            return Err(Error::InvalidSubgroup(format!("{} is not an involution", h.basis_names()[g])));
        }
    }
    if k == 2 {
        let (x, y) = (h.basis_vec(generators[0]), h.basis_vec(generators[1]));
        if h.mul(&x, &y) != h.mul(&y, &x) {
            return Err(Error::InvalidSubgroup("generators do not commute".to_string()));
        }
    }
    for a in 0..size {
        for b in 0..a {
            if elements[a] == elements[b] {
                return Err(Error::InvalidSubgroup("generators are not independent".to_string()));
            }
        }
    }

    if beta.len() != size || beta.iter().any(|row| row.len() != size) {
        return Err(Error::NotABicharacter(format!("beta must be {size}x{size}")));
    }
    for c in 0..size {
        for d in 0..size {
            if beta[c][d] != 1 && beta[c][d] != -1 {
                return Err(Error::NotABicharacter(format!("beta[{c}][{d}] is not ±1")));
            }
            for e in 0..size {
                if beta[c ^ d][e] != beta[c][e] * beta[d][e] || beta[e][c ^ d] != beta[e][c] * beta[e][d] {
                    return Err(Error::NotABicharacter(format!("multiplicativity fails at ({c}, {d}, {e})")));
                }
            }
        }
    }

    let idempotents: Vec<Vec<Rational>> = (0..size)
        .map(|c| {
            let mut e = zeros(n);
            for (mask, g) in elements.iter().enumerate() {
                let sign = if (c & mask).count_ones() % 2 == 0 { 1 } else { -1 };
                crate::linalg::axpy(&mut e, &frac(sign, size as i64), g);
            }
            e
        })
        .collect();
    let mut f = zeros(n * n);
    for c in 0..size {
        for d in 0..size {
            crate::linalg::axpy(&mut f, &int(beta[c][d]), &outer(&idempotents[c], &idempotents[d]));
        }
    }
    // β takes values ±1, so β⁻¹ = β and F⁻¹ = F.
    Ok(WeakCocycle::new(f.clone(), f))
}

/// `β(χ_{ab}, χ_{cd}) = (-1)^{ad}` on `Z₂ × Z₂`.
pub fn klein_beta() -> Vec<Vec<i64>> {
    (0..4).map(|x| (0..4).map(|y| if (x >> 1) & y & 1 == 1 { -1 } else { 1 }).collect()).collect()
}

/// `β(χ_{ab}, χ_{cd}) = (-1)^{(a+b)d}` on `Z₂ × Z₂`.
pub fn mixed_klein_beta() -> Vec<Vec<i64>> {
    (0..4).map(|x| (0..4).map(|y| if ((x >> 1) ^ x) & y & 1 == 1 { -1 } else { 1 }).collect()).collect()
}

/// The nontrivial bicharacter on `Z₂`.
pub fn z2_beta() -> Vec<Vec<i64>> {
    alloc::vec![alloc::vec![1, 1], alloc::vec![1, -1]]
}
