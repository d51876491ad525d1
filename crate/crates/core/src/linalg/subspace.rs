use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{zeros, LinearMap, Rational};

/// In-place reduced row-echelon form over the first `ncols` columns.
/// Zero rows are dropped; returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `Q^n`, stored as the nonzero rows of its reduced
/// row-echelon form. Two spans are equal iff their `SubspaceBasis` values
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let mut vectors = vectors;
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
        }
        let pivots = rref(&mut vectors, ambient_dim);
        Self { ambient_dim, vectors, pivots }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(|i| super::unit_vector(ambient_dim, i)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    /// In RREF the coordinate on row `k` is just `v[pivot_k]`.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim);
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    /// `Σ c_k b_k`
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = zeros(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.vectors) {
            super::axpy(&mut out, c, b);
        }
        out
    }

    /// Ambient × dim matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_columns(self.ambient_dim, &self.vectors)
    }

    /// `dim × ambient` matrix reading coordinates off at the pivots; a left
    /// inverse of [`inclusion`](Self::inclusion).
    pub fn coordinate_map(&self) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim(), self.ambient_dim);
        for (j, &p) in self.pivots.iter().enumerate() {
            m.set(j, p, super::one());
        }
        m
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors.iter().all(|v| other.contains(v))
    }

    /// The tensor square basis `{b_a ⊗ b_b}` in `Q^{n²}` (not itself in RREF).
    /// Coordinates of `y` are read off at the pivot pairs.
    pub fn tensor_coords(&self, other: &SubspaceBasis, y: &[Rational]) -> Option<Vec<Rational>> {
        let n2 = other.ambient_dim;
        assert_eq!(y.len(), self.ambient_dim * n2);
        let mut c = Vec::with_capacity(self.dim() * other.dim());
        for &p in &self.pivots {
            for &q in &other.pivots {
                c.push(y[p * n2 + q].clone());
            }
        }
        let mut back = zeros(y.len());
        for (a, u) in self.vectors.iter().enumerate() {
            for (b, w) in other.vectors.iter().enumerate() {
                let k = &c[a * other.dim() + b];
                if k.is_zero() {
                    continue;
                }
                for (i, ui) in u.iter().enumerate() {
                    if ui.is_zero() {
                        continue;
                    }
                    let kui = k * ui;
                    for (j, wj) in w.iter().enumerate() {
                        if !wj.is_zero() {
                            back[i * n2 + j] += &kui * wj;
                        }
                    }
                }
            }
        }
        (back == y).then_some(c)
    }
}
