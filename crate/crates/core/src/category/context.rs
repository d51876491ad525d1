use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{LinearMap, Rational, SubspaceBasis};
use crate::qt::{twisted_algebra, QTStructure, WeakCocycle};
use crate::weak_hopf::QuantumGroupoid;

use super::module::{restrict, HModule};
use super::tensor::{element2_action, TruncatedTensor};

/// Which braiding a [`ModuleCategory`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidingKind {
    /// `Ψ(v ⊗ w) = R² · w ⊗ R¹ · v` on ordinary modules.
    Psi,
    /// `Φ(m ⊗ n) = Ad_{F^{-(1)}F^{(2)}}(n) ⊗ Ad_{F^{-(2)}F^{(1)}}(m)` with the
    /// tensor action `Ad_h(m ⊗ n) = Ad_{F^{-(1)}h_1F^{(1)}}(m) ⊗ Ad_{F^{-(2)}h_2F^{(2)}}(n)`.
    Phi,
}

/// A braided module category over `H`: truncated tensor products, the unit
/// object `H_t` with `h ⊳ z = ε_t(hz)`, unitors
/// `l(z ⊗ v) = z · v`, `r(v ⊗ z) = S⁻¹(z) · v`, and a braiding.
///
/// For [`BraidingKind::Phi`] the tensor action, unit object and unitors come
/// from the twisted structure `Δ̃ = F⁻¹ΔF`, `S̃ = v S v⁻¹`; the braiding is
/// given by the element `F₂₁⁻¹F` acting as `R` does in `Ψ`.
#[derive(Clone, Debug)]
pub struct ModuleCategory {
    kind: BraidingKind,
    module_algebra: String,
    structure: QuantumGroupoid,
    braid: Vec<Rational>,
    braid_inv: Vec<Rational>,
    target: SubspaceBasis,
    eps_t: LinearMap,
}

impl ModuleCategory {
    pub fn psi(h: &QuantumGroupoid, qt: &QTStructure) -> Self {
        Self::build(BraidingKind::Psi, h.name().into(), h.clone(), qt.r().to_vec(), qt.r_inv().to_vec())
    }

    /// Requires `H` cocommutative.
    pub fn phi(h: &QuantumGroupoid, wc: &WeakCocycle) -> Result<Self, Error> {
        if !h.is_cocommutative() {
            return Err(Error::NotCocommutative);
        }
        let structure = twisted_algebra(h, wc)?;
        let braid = h.tensor_mul(2, &h.flip(wc.f_inv()), wc.f());
        let braid_inv = h.tensor_mul(2, wc.f_inv(), &h.flip(wc.f()));
        Ok(Self::build(BraidingKind::Phi, h.name().into(), structure, braid, braid_inv))
    }

    /// The `Ψ` braiding of an arbitrary quantum groupoid whose modules are
    /// accepted under `module_algebra`'s name.
    pub fn psi_named(module_algebra: &str, h: &QuantumGroupoid, qt: &QTStructure) -> Self {
        Self::build(BraidingKind::Psi, module_algebra.into(), h.clone(), qt.r().to_vec(), qt.r_inv().to_vec())
    }

    fn build(
        kind: BraidingKind,
        module_algebra: String,
        structure: QuantumGroupoid,
        braid: Vec<Rational>,
        braid_inv: Vec<Rational>,
    ) -> Self {
        let target = structure.target_subalgebra();
        let eps_t = structure.epsilon_t_map();
        Self { kind, module_algebra, structure, braid, braid_inv, target, eps_t }
    }

    pub fn kind(&self) -> BraidingKind {
        self.kind
    }

    /// The quantum groupoid whose coproduct and antipode drive the monoidal structure.
    pub fn structure(&self) -> &QuantumGroupoid {
        &self.structure
    }

    pub fn braid_element(&self) -> &[Rational] {
        &self.braid
    }

    pub fn braid_inverse_element(&self) -> &[Rational] {
        &self.braid_inv
    }

    /// `H_t` as a subspace of `H`.
    pub fn target(&self) -> &SubspaceBasis {
        &self.target
    }

    pub fn accepts(&self, m: &HModule) -> Result<(), Error> {
        if m.algebra_name() == self.module_algebra || m.algebra_name() == self.structure.name() {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra(self.module_algebra.clone(), m.algebra_name().into()))
        }
    }

    /// `x ∈ H ⊗ H` acting on the plain `M ⊗ N`.
    pub fn element2_action(&self, x: &[Rational], m: &HModule, n: &HModule) -> LinearMap {
        element2_action(x, m, n)
    }

    /// The action of `e_i` on the plain `M ⊗ N` through the coproduct.
    pub fn plain_tensor_action(&self, i: usize, m: &HModule, n: &HModule) -> LinearMap {
        let h = &self.structure;
        element2_action(&h.comul(&h.basis_vec(i)), m, n)
    }

    pub fn tensor(&self, m: &HModule, n: &HModule) -> Result<TruncatedTensor, Error> {
        self.accepts(m)?;
        self.accepts(n)?;
        let h = &self.structure;
        let projector = element2_action(&h.delta_one(), m, n);
        let plain: Vec<LinearMap> = (0..h.dim()).map(|i| self.plain_tensor_action(i, m, n)).collect();
        Ok(TruncatedTensor::new(m.dim(), n.dim(), projector, &plain))
    }

    /// `H_t` with `h ⊳ z = ε_t(hz)`.
    pub fn unit_object(&self) -> HModule {
        let h = &self.structure;
        let action = (0..h.dim())
            .map(|i| restrict(&self.eps_t.compose(&h.left_mul(&h.basis_vec(i))), &self.target, "unit action"))
            .collect::<Result<Vec<_>, _>>()
            .expect("ε_t lands in H_t");
        HModule::new("unit", self.module_algebra.clone(), self.target.dim(), action).expect("square actions")
    }

    /// The plain map `H_t ⊗ M → M`, `z ⊗ v ↦ z · v`.
    pub fn left_unitor_plain(&self, m: &HModule) -> LinearMap {
        let t = self.target.dim();
        let d = m.dim();
        let mut out = LinearMap::zeros(d, t * d);
        for (a, z) in self.target.vectors().iter().enumerate() {
            let op = m.act(z);
            for j in 0..d {
                for i in 0..d {
                    out.set(i, a * d + j, op.get(i, j).clone());
                }
            }
        }
        out
    }

    /// The plain map `M ⊗ H_t → M`, `v ⊗ z ↦ S⁻¹(z) · v`.
    pub fn right_unitor_plain(&self, m: &HModule) -> LinearMap {
        let t = self.target.dim();
        let d = m.dim();
        let s_inv = self.structure.antipode_inverse();
        let mut out = LinearMap::zeros(d, d * t);
        for (a, z) in self.target.vectors().iter().enumerate() {
            let op = m.act(&s_inv.apply(z));
            for j in 0..d {
                for i in 0..d {
                    out.set(i, j * t + a, op.get(i, j).clone());
                }
            }
        }
        out
    }

    /// `l` and `r` on truncated-tensor coordinates.
    pub fn unitors(&self, m: &HModule) -> Result<(LinearMap, LinearMap), Error> {
        let unit = self.unit_object();
        let left = self.tensor(&unit, m)?;
        let right = self.tensor(m, &unit)?;
        Ok((
            self.left_unitor_plain(m).compose(&left.inclusion()),
            self.right_unitor_plain(m).compose(&right.inclusion()),
        ))
    }

    /// `M ⊗ N → N ⊗ M`, `v ⊗ w ↦ R² · w ⊗ R¹ · v`, on plain tensors.
    pub fn braiding_plain(&self, m: &HModule, n: &HModule) -> LinearMap {
        LinearMap::flip(m.dim(), n.dim()).compose(&element2_action(&self.braid, m, n))
    }

    /// `N ⊗ M → M ⊗ N`, `w ⊗ v ↦ R^{-(1)} · v ⊗ R^{-(2)} · w`, on plain tensors.
    pub fn braiding_inverse_plain(&self, m: &HModule, n: &HModule) -> LinearMap {
        element2_action(&self.braid_inv, m, n).compose(&LinearMap::flip(n.dim(), m.dim()))
    }

    /// The braiding between truncated tensors, in image coordinates.
    pub fn braiding(&self, m: &HModule, n: &HModule) -> Result<LinearMap, Error> {
        let mn = self.tensor(m, n)?;
        let nm = self.tensor(n, m)?;
        Ok(nm.projection().compose(&self.braiding_plain(m, n)).compose(&mn.inclusion()))
    }

    pub fn braiding_inverse(&self, m: &HModule, n: &HModule) -> Result<LinearMap, Error> {
        let mn = self.tensor(m, n)?;
        let nm = self.tensor(n, m)?;
        Ok(mn.projection().compose(&self.braiding_inverse_plain(m, n)).compose(&nm.inclusion()))
    }

    /// Restricts a plain operator on `M ⊗ N` to the truncated tensor.
    pub fn restrict_to(&self, op: &LinearMap, t: &TruncatedTensor) -> Result<LinearMap, Error> {
        restrict(op, t.image(), "tensor operator")
    }
}
