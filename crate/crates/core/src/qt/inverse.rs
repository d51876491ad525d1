use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{LinearMap, Rational};
use crate::weak_hopf::WeakBialgebra;

/// Matrix of `Y ↦ left · Y · right` on `H ⊗ H`.
pub(crate) fn sandwich_map(h: &WeakBialgebra, left: &[Rational], right: &[Rational]) -> LinearMap {
    let n2 = h.dim() * h.dim();
    let cols: Vec<Vec<Rational>> = (0..n2)
        .map(|j| {
            let e = crate::linalg::unit_vector(n2, j);
            h.tensor_mul(2, &h.tensor_mul(2, left, &e), right)
        })
        .collect();
    LinearMap::from_columns(n2, &cols)
}

/// Finds the unique `X ∈ left·(H⊗H)·right` with `x X = x_right_unit` and
/// `X x = x_left_unit`.
pub(crate) fn solve_weak_inverse(
    h: &WeakBialgebra,
    x: &[Rational],
    left: &[Rational],
    right: &[Rational],
    x_times_inverse: &[Rational],
    inverse_times_x: &[Rational],
    label: &'static str,
) -> Result<Vec<Rational>, Error> {
    let n2 = h.dim() * h.dim();
    let sandwich = sandwich_map(h, left, right).image();
    let basis = sandwich.vectors();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(basis.len());
    for b in basis {
        let mut col = h.tensor_mul(2, x, b);
        col.extend(h.tensor_mul(2, b, x));
        cols.push(col);
    }
    let system = LinearMap::from_columns(2 * n2, &cols);
    let mut rhs = x_times_inverse.to_vec();
    rhs.extend_from_slice(inverse_times_x);
    let coords = system.solve_unique(&rhs).map_err(|_| Error::NoInverse(label))?;
    Ok(sandwich.combine(&coords))
}
