use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{one, LinearMap, Rational};

use super::{QuantumGroupoid, WeakBialgebra};

/// Finds the antipode of `b` by solving the linear system
/// `S * id = ε_s`, `id * S = ε_t`, `ε_s * S = S` for the `n²` entries of `S`.
/// The last equation is `S * id * S = S` with the first substituted in.
pub fn solve_antipode(b: &WeakBialgebra) -> Result<LinearMap, Error> {
    let n = b.dim();
    let unknowns = n * n;
    let var = |r: usize, c: usize| r * n + c;
    let es = b.epsilon_s_map();
    let et = b.epsilon_t_map();
    let mut system = LinearMap::zeros(3 * n * n, unknowns);
    let mut rhs: Vec<Rational> = Vec::with_capacity(3 * n * n);

    let bump = |m: &mut LinearMap, row: usize, col: usize, c: Rational| {
        let cur = m.get(row, col) + c;
        m.set(row, col, cur);
    };

    for i in 0..n {
        let coproduct = b.coproduct_of_basis(i);
        // S * id: Σ d_pq S[r][p] e_r e_q
        for (pq, d) in coproduct {
            let (p, q) = (pq / n, pq % n);
            for r in 0..n {
                for (k, m) in b.product_of_basis(r, q) {
                    bump(&mut system, i * n + k, var(r, p), d * m);
                }
            }
        }
        // id * S: Σ d_pq S[r][q] e_p e_r
        for (pq, d) in coproduct {
            let (p, q) = (pq / n, pq % n);
            for r in 0..n {
                for (k, m) in b.product_of_basis(p, r) {
                    bump(&mut system, n * n + i * n + k, var(r, q), d * m);
                }
            }
        }
        // ε_s * S - S: Σ d_pq ε_s(e_p) S[r][q] e_r  -  S[k][i] e_k
        for (pq, d) in coproduct {
            let (p, q) = (pq / n, pq % n);
            let left = es.column(p);
            for r in 0..n {
                let prod = b.mul(&left, &b.basis_vec(r));
                for (k, m) in prod.iter().enumerate() {
                    if !m.is_zero() {
                        bump(&mut system, 2 * n * n + i * n + k, var(r, q), d * m);
                    }
                }
            }
        }
        for k in 0..n {
            bump(&mut system, 2 * n * n + i * n + k, var(k, i), -one());
        }
    }
    for i in 0..n {
        rhs.extend(es.column(i));
    }
    for i in 0..n {
        rhs.extend(et.column(i));
    }
    rhs.extend(core::iter::repeat_with(Rational::zero).take(n * n));

    let flat = system.solve_unique(&rhs).map_err(|e| match e {
        Error::Inconsistent => Error::NoAntipode,
        Error::NotUnique { nullity } => Error::NonUniqueAntipode { nullity },
        other => other,
    })?;
    Ok(LinearMap::from_fn(n, n, |r, c| flat[var(r, c)].clone()))
}

/// Solves for the antipode and wraps `b` as a quantum groupoid.
pub fn with_solved_antipode(b: WeakBialgebra) -> Result<QuantumGroupoid, Error> {
    let s = solve_antipode(&b)?;
    QuantumGroupoid::new(b, s)
}
