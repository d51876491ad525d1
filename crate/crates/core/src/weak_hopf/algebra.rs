use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Deref;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::tensor::{self, unflatten};
use crate::linalg::{axpy, unit_vector, zeros, LinearMap, Rational, SubspaceBasis};

type SparseRow = Vec<(usize, Rational)>;

/// A finite-dimensional weak bialgebra given by structure constants:
/// `e_i e_j = Σ_k mul[i][j][k] e_k` and `Δ(e_i) = Σ_{j,k} comul[i][j][k] e_j ⊗ e_k`.
///
/// Elements of `H^{⊗k}` are flat coefficient vectors of length `dim^k`,
/// `e_{i_1} ⊗ ... ⊗ e_{i_k}` sitting at index `((i_1·dim + i_2)·dim + ...)`.
/// Construction checks shapes only; the axioms are the business of
/// [`check_weak_bialgebra`](super::check_weak_bialgebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBialgebra {
    name: String,
    basis: Vec<String>,
    mul: Vec<Rational>,
    unit: Vec<Rational>,
    comul: Vec<Rational>,
    counit: Vec<Rational>,
    mul_table: Vec<SparseRow>,
    comul_table: Vec<SparseRow>,
}

fn sparse_rows(flat: &[Rational], rows: usize, width: usize) -> Vec<SparseRow> {
    (0..rows)
        .map(|r| {
            flat[r * width..(r + 1) * width]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect()
}

fn check_len(expected: usize, found: usize) -> Result<(), Error> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl WeakBialgebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mul: Vec<Rational>,
        unit: Vec<Rational>,
        comul: Vec<Rational>,
        counit: Vec<Rational>,
    ) -> Result<Self, Error> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        check_len(n * n * n, mul.len())?;
        check_len(n, unit.len())?;
        check_len(n * n * n, comul.len())?;
        check_len(n, counit.len())?;
        let mul_table = sparse_rows(&mul, n * n, n);
        let comul_table = sparse_rows(&comul, n, n * n);
        Ok(Self { name: name.into(), basis, mul, unit, comul, counit, mul_table, comul_table })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mul_tensor(&self) -> &[Rational] {
        &self.mul
    }

    pub fn comul_tensor(&self) -> &[Rational] {
        &self.comul
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Rational] {
        &self.counit
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rational> {
        unit_vector(self.dim(), i)
    }

    /// `Σ_k mul[i][j][k] e_k` as a sparse list.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mul_table[i * self.dim() + j]
    }

    pub fn coproduct_of_basis(&self, i: usize) -> &[(usize, Rational)] {
        &self.comul_table[i]
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.tensor_mul(1, a, b)
    }

    /// Product in the algebra `H^{⊗k}`.
    pub fn tensor_mul(&self, k: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let len = n.pow(k as u32);
        assert_eq!(x.len(), len, "tensor_mul: left factor has wrong length");
        assert_eq!(y.len(), len, "tensor_mul: right factor has wrong length");
        let dims = alloc::vec![n; k];
        let xs: Vec<(Vec<usize>, &Rational)> =
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (unflatten(i, &dims), c)).collect();
        let ys: Vec<(Vec<usize>, &Rational)> =
            y.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (unflatten(i, &dims), c)).collect();
        let mut out = zeros(len);
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        let mut next: Vec<(usize, Rational)> = Vec::new();
        for (ix, cx) in &xs {
            for (iy, cy) in &ys {
                acc.clear();
                acc.push((0, *cx * *cy));
                for s in 0..k {
                    next.clear();
                    for (pos, c) in &acc {
                        for (kk, m) in self.product_of_basis(ix[s], iy[s]) {
                            next.push((pos * n + kk, c * m));
                        }
                    }
                    core::mem::swap(&mut acc, &mut next);
                    if acc.is_empty() {
                        break;
                    }
                }
                for (pos, c) in acc.drain(..) {
                    out[pos] += c;
                }
            }
        }
        out
    }

    pub fn comul(&self, a: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zeros(n * n);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (jk, d) in self.coproduct_of_basis(i) {
                out[*jk] += c * d;
            }
        }
        out
    }

    pub fn counit(&self, a: &[Rational]) -> Rational {
        a.iter().zip(&self.counit).filter(|(x, _)| !x.is_zero()).map(|(x, e)| x * e).sum()
    }

    /// `μ` as an `n × n²` matrix.
    pub fn mul_map(&self) -> LinearMap {
        let n = self.dim();
        let mut m = LinearMap::zeros(n, n * n);
        for ij in 0..n * n {
            for (k, c) in &self.mul_table[ij] {
                m.set(*k, ij, c.clone());
            }
        }
        m
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn comul_map(&self) -> LinearMap {
        let n = self.dim();
        let mut m = LinearMap::zeros(n * n, n);
        for i in 0..n {
            for (jk, c) in &self.comul_table[i] {
                m.set(*jk, i, c.clone());
            }
        }
        m
    }

    pub fn counit_map(&self) -> LinearMap {
        LinearMap::from_rows(&[self.counit.clone()])
    }

    /// Left multiplication `x ↦ a x`.
    pub fn left_mul(&self, a: &[Rational]) -> LinearMap {
        let n = self.dim();
        LinearMap::from_columns(n, &(0..n).map(|j| self.mul(a, &self.basis_vec(j))).collect::<Vec<_>>())
    }

    /// Right multiplication `x ↦ x a`.
    pub fn right_mul(&self, a: &[Rational]) -> LinearMap {
        let n = self.dim();
        LinearMap::from_columns(n, &(0..n).map(|j| self.mul(&self.basis_vec(j), a)).collect::<Vec<_>>())
    }

    /// Applies `Δ` to slot `slot` of a `k`-fold tensor, giving a `(k+1)`-fold one.
    pub fn comul_at(&self, x: &[Rational], k: usize, slot: usize) -> Vec<Rational> {
        let n = self.dim();
        tensor::apply_block(x, n.pow(slot as u32), n, n.pow((k - slot - 1) as u32), &self.comul_map())
    }

    /// Applies `map` (`n × n`) to slot `slot` of a `k`-fold tensor.
    pub fn map_at(&self, x: &[Rational], k: usize, slot: usize, map: &LinearMap) -> Vec<Rational> {
        let n = self.dim();
        tensor::apply_block(x, n.pow(slot as u32), n, n.pow((k - slot - 1) as u32), map)
    }

    /// Applies `ε` to slot `slot` of a `k`-fold tensor.
    pub fn counit_at(&self, x: &[Rational], k: usize, slot: usize) -> Vec<Rational> {
        let n = self.dim();
        tensor::apply_block(x, n.pow(slot as u32), n, n.pow((k - slot - 1) as u32), &self.counit_map())
    }

    /// Places the slots of the `positions.len()`-fold tensor `x` at
    /// `positions` inside a `total`-fold tensor, filling the rest with `1`.
    /// `legs(R, &[0, 2], 3)` is `R_{13}`.
    pub fn legs(&self, x: &[Rational], positions: &[usize], total: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut y = x.to_vec();
        let mut order: Vec<usize> = positions.to_vec();
        for s in 0..total {
            if !positions.contains(&s) {
                y = tensor::outer(&y, &self.unit);
                order.push(s);
            }
        }
        debug_assert_eq!(order.len(), total);
        // input slot j holds natural slot order[j]; output slot o needs the j with order[j] == o
        let perm: Vec<usize> = (0..total).map(|o| order.iter().position(|&s| s == o).unwrap()).collect();
        tensor::permute(&y, &alloc::vec![n; total], &perm)
    }

    /// Reorders the slots of a `k`-fold tensor: output slot `s` is input slot `perm[s]`.
    pub fn permute(&self, x: &[Rational], perm: &[usize]) -> Vec<Rational> {
        tensor::permute(x, &alloc::vec![self.dim(); perm.len()], perm)
    }

    /// `x_{21}` for `x ∈ H⊗H`.
    pub fn flip(&self, x: &[Rational]) -> Vec<Rational> {
        self.permute(x, &[1, 0])
    }

    /// `Δ(1) = 1_1 ⊗ 1_2`.
    pub fn delta_one(&self) -> Vec<Rational> {
        self.comul(&self.unit)
    }

    pub fn delta_one_cop(&self) -> Vec<Rational> {
        self.flip(&self.delta_one())
    }

    /// `ε(e_i e_j)` for all `i, j`, row-major.
    pub(crate) fn counit_pairing(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zeros(n * n);
        for ij in 0..n * n {
            for (k, c) in &self.mul_table[ij] {
                out[ij] += c * &self.counit[*k];
            }
        }
        out
    }

    fn counital_map(&self, pick: impl Fn(&[Rational], usize, usize, usize) -> (Rational, usize)) -> LinearMap {
        let n = self.dim();
        let pair = self.counit_pairing();
        let d1 = self.delta_one();
        let mut m = LinearMap::zeros(n, n);
        for h in 0..n {
            for pq in 0..n * n {
                let c = &d1[pq];
                if c.is_zero() {
                    continue;
                }
                let (w, out) = pick(&pair, h, pq / n, pq % n);
                if !w.is_zero() {
                    let cur = m.get(out, h) + c * &w;
                    m.set(out, h, cur);
                }
            }
        }
        m
    }

    /// Matrix of `ε_t(h) = ε(1_1 h) 1_2`.
    pub fn epsilon_t_map(&self) -> LinearMap {
        let n = self.dim();
        self.counital_map(|pair, h, p, q| (pair[p * n + h].clone(), q))
    }

    /// Matrix of `ε_s(h) = 1_1 ε(h 1_2)`.
    pub fn epsilon_s_map(&self) -> LinearMap {
        let n = self.dim();
        self.counital_map(|pair, h, p, q| (pair[h * n + q].clone(), p))
    }

    /// Matrix of `ε̄_s(h) = ε(h 1_1) 1_2`.
    pub fn epsilon_s_bar_map(&self) -> LinearMap {
        let n = self.dim();
        self.counital_map(|pair, h, p, q| (pair[h * n + p].clone(), q))
    }

    /// Matrix of `ε̄_t(h) = 1_1 ε(1_2 h)`.
    pub fn epsilon_t_bar_map(&self) -> LinearMap {
        let n = self.dim();
        self.counital_map(|pair, h, p, q| (pair[q * n + h].clone(), p))
    }

    pub fn epsilon_t(&self, h: &[Rational]) -> Vec<Rational> {
        self.epsilon_t_map().apply(h)
    }

    pub fn epsilon_s(&self, h: &[Rational]) -> Vec<Rational> {
        self.epsilon_s_map().apply(h)
    }

    pub fn epsilon_s_bar(&self, h: &[Rational]) -> Vec<Rational> {
        self.epsilon_s_bar_map().apply(h)
    }

    pub fn epsilon_t_bar(&self, h: &[Rational]) -> Vec<Rational> {
        self.epsilon_t_bar_map().apply(h)
    }

    /// `H_t`, the image of `ε_t`.
    pub fn target_subalgebra(&self) -> SubspaceBasis {
        self.epsilon_t_map().image()
    }

    /// `H_s`, the image of `ε_s`.
    pub fn source_subalgebra(&self) -> SubspaceBasis {
        self.epsilon_s_map().image()
    }

    /// Convolution `f * g = μ ∘ (f ⊗ g) ∘ Δ`.
    pub fn convolve(&self, f: &LinearMap, g: &LinearMap) -> LinearMap {
        let n = self.dim();
        assert!(f.rows() == n && f.cols() == n && g.rows() == n && g.cols() == n, "convolve expects dim x dim maps");
        let fc: Vec<Vec<Rational>> = (0..n).map(|j| f.column(j)).collect();
        let gc: Vec<Vec<Rational>> = (0..n).map(|j| g.column(j)).collect();
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut acc = zeros(n);
                for (pq, d) in self.coproduct_of_basis(i) {
                    let prod = self.mul(&fc[pq / n], &gc[pq % n]);
                    axpy(&mut acc, d, &prod);
                }
                acc
            })
            .collect();
        LinearMap::from_columns(n, &cols)
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.comul(&self.basis_vec(i));
            d == self.flip(&d)
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul_table[i * n + j] == self.mul_table[j * n + i]))
    }

    /// The element `Σ_i c_i e_i` for the given coefficient list.
    pub fn element(&self, coeffs: &[(usize, Rational)]) -> Vec<Rational> {
        let mut v = zeros(self.dim());
        for (i, c) in coeffs {
            v[*i] += c;
        }
        v
    }

    pub fn one_is(&self, v: &[Rational]) -> bool {
        v == self.unit.as_slice()
    }

    /// Replaces `Δ`, keeping `μ, η, ε` and the basis.
    pub fn with_comul(&self, name: impl Into<String>, comul: Vec<Rational>) -> Result<Self, Error> {
        Self::new(name, self.basis.clone(), self.mul.clone(), self.unit.clone(), comul, self.counit.clone())
    }
}

/// A weak bialgebra together with a bijective antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumGroupoid {
    base: WeakBialgebra,
    antipode: LinearMap,
    antipode_inv: LinearMap,
}

impl QuantumGroupoid {
    /// Rejects a non-invertible `S`; the axioms themselves are checked by
    /// [`check_quantum_groupoid`](super::check_quantum_groupoid).
    pub fn new(base: WeakBialgebra, antipode: LinearMap) -> Result<Self, Error> {
        let n = base.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch { expected: n * n, found: antipode.rows() * antipode.cols() });
        }
        let antipode_inv = antipode.inverse().ok_or(Error::SingularAntipode)?;
        Ok(Self { base, antipode, antipode_inv })
    }

    pub fn base(&self) -> &WeakBialgebra {
        &self.base
    }

    pub fn into_base(self) -> WeakBialgebra {
        self.base
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &LinearMap {
        &self.antipode_inv
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.base.set_name(name);
    }

    pub fn s(&self, h: &[Rational]) -> Vec<Rational> {
        self.antipode.apply(h)
    }

    pub fn s_inv(&self, h: &[Rational]) -> Vec<Rational> {
        self.antipode_inv.apply(h)
    }

    /// The adjoint action `Ad_h(g) = h_1 g S(h_2)` as an `n × n` matrix.
    pub fn adjoint(&self, h: &[Rational]) -> LinearMap {
        let n = self.dim();
        let d = self.comul(h);
        let mut m = LinearMap::zeros(n, n);
        for pq in 0..n * n {
            let c = &d[pq];
            if c.is_zero() {
                continue;
            }
            let left = self.left_mul(&self.basis_vec(pq / n));
            let right = self.right_mul(&self.s(&self.basis_vec(pq % n)));
            m.add_scaled(c, &left.compose(&right));
        }
        m
    }
}

impl Deref for QuantumGroupoid {
    type Target = WeakBialgebra;

    fn deref(&self) -> &WeakBialgebra {
        &self.base
    }
}
