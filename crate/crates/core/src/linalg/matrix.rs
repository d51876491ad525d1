use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{zeros, Rational, SubspaceBasis};
use crate::error::Error;

/// Dense row-major matrix over the rationals. Acts on column vectors:
/// column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: zeros(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Self { rows: rows.len(), cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `self * x` for a column vector `x`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "apply: vector length {} vs {} columns", x.len(), self.cols);
        let mut out = zeros(self.rows);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.entries[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        out
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "compose: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Rational, other: &LinearMap) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Kronecker product: `(A⊗B)[i·rB+k, j·cB+l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, rhs: &LinearMap) -> LinearMap {
        let (rb, cb) = (rhs.rows, rhs.cols);
        let mut out = Self::zeros(self.rows * rb, self.cols * cb);
        let out_cols = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.entries[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = &rhs.entries[k * cb + l];
                        if !b.is_zero() {
                            out.entries[(i * rb + k) * out_cols + j * cb + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Row-reduces a copy and returns its rank.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        SubspaceBasis::span(self.cols, rows).dim()
    }

    /// Canonical basis of `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = super::subspace::rref(&mut rows, self.cols);
        let mut basis = Vec::new();
        let mut is_pivot = alloc::vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = zeros(self.cols);
            v[free] = Rational::one();
            for (c, slot) in is_pivot.iter().enumerate() {
                if let Some(r) = *slot {
                    v[c] = -rows[r][free].clone();
                }
            }
            basis.push(v);
        }
        SubspaceBasis::span(self.cols, basis)
    }

    /// Canonical basis of the column space.
    pub fn image(&self) -> SubspaceBasis {
        let cols: Vec<Vec<Rational>> = (0..self.cols).map(|j| self.column(j)).collect();
        SubspaceBasis::span(self.rows, cols)
    }

    /// Some `x` with `A x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        self.solve_with_nullity(b).map(|(x, _)| x)
    }

    /// Like [`solve`](Self::solve) but insists the solution is unique.
    pub fn solve_unique(&self, b: &[Rational]) -> Result<Vec<Rational>, Error> {
        match self.solve_with_nullity(b) {
            None => Err(Error::Inconsistent),
            Some((x, 0)) => Ok(x),
            Some((_, nullity)) => Err(Error::NotUnique { nullity }),
        }
    }

    fn solve_with_nullity(&self, b: &[Rational]) -> Option<(Vec<Rational>, usize)> {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = super::subspace::rref(&mut rows, n + 1);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = zeros(n);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r][n].clone();
        }
        Some((x, n - pivots.len()))
    }

    /// Two-sided inverse of a square matrix.
    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(zeros(n));
                r[n + i] = Rational::one();
                r
            })
            .collect();
        let pivots = super::subspace::rref(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let entries = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(Self { rows: n, cols: n, entries })
    }

    /// The swap `x⊗y ↦ y⊗x` from `C^a ⊗ C^b` to `C^b ⊗ C^a`.
    pub fn flip(a: usize, b: usize) -> LinearMap {
        let mut m = Self::zeros(a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, Rational::one());
            }
        }
        m
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
