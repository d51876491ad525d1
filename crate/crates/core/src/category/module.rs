use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{LinearMap, Rational, SubspaceBasis};
use crate::report::{expect_eq, VerificationReport};
use crate::weak_hopf::{QuantumGroupoid, WeakBialgebra};

/// A finite-dimensional left module: `action[i]` is the matrix of the
/// basis element `e_i` acting on the module's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    name: String,
    algebra: String,
    dim: usize,
    action: Vec<LinearMap>,
}

impl HModule {
    pub fn new(
        name: impl Into<String>,
        algebra: impl Into<String>,
        dim: usize,
        action: Vec<LinearMap>,
    ) -> Result<Self, Error> {
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim * dim, found: a.rows() * a.cols() });
            }
        }
        Ok(Self { name: name.into(), algebra: algebra.into(), dim, action })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &WeakBialgebra) -> Self {
        let action = (0..h.dim()).map(|i| h.left_mul(&h.basis_vec(i))).collect();
        Self { name: "regular".into(), algebra: h.name().into(), dim: h.dim(), action }
    }

    /// Restricts ambient operators `op(i)` to a subspace that they preserve,
    /// in the subspace's canonical coordinates.
    pub fn restricted(
        name: impl Into<String>,
        algebra: &WeakBialgebra,
        sub: &SubspaceBasis,
        op: impl Fn(usize) -> LinearMap,
    ) -> Result<Self, Error> {
        let mut action = Vec::with_capacity(algebra.dim());
        for i in 0..algebra.dim() {
            action.push(restrict(&op(i), sub, "action")?);
        }
        Ok(Self { name: name.into(), algebra: algebra.name().into(), dim: sub.dim(), action })
    }

    /// `Ad_h(g) = h_1 g S(h_2)` on an `Ad`-stable subspace such as `C_H(H_s)`.
    pub fn adjoint(h: &QuantumGroupoid, carrier: &SubspaceBasis) -> Result<Self, Error> {
        Self::restricted("adjoint", h, carrier, |i| h.adjoint(&h.basis_vec(i)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &LinearMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[LinearMap] {
        &self.action
    }

    /// The operator of an arbitrary algebra element `x`.
    pub fn act(&self, x: &[Rational]) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }
}

/// `coords ∘ op ∘ inclusion`, failing if `op` leaves the subspace.
pub(crate) fn restrict(op: &LinearMap, sub: &SubspaceBasis, map: &'static str) -> Result<LinearMap, Error> {
    map_between(op, sub, sub, map)
}

/// Expresses `op` between two subspaces in their canonical coordinates.
fn map_between(
    op: &LinearMap,
    from: &SubspaceBasis,
    to: &SubspaceBasis,
    map: &'static str,
) -> Result<LinearMap, Error> {
    let cols = from
        .vectors()
        .iter()
        .enumerate()
        .map(|(index, b)| to.coords(&op.apply(b)).ok_or(Error::ClosureViolation { map, index }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::from_columns(to.dim(), &cols))
}

/// `(gh)·v = g·(h·v)` on basis triples and `1·v = v`.
pub fn check_module(h: &WeakBialgebra, m: &HModule) -> VerificationReport {
    let n = h.dim();
    let mut report = VerificationReport::new("module");
    report.check("module-associativity", || {
        for i in 0..n {
            for j in 0..n {
                let gh = m.act(&h.mul(&h.basis_vec(i), &h.basis_vec(j)));
                let composed = m.action(i).compose(m.action(j));
                for a in 0..m.dim() {
                    expect_eq(&[i, j, a], gh.column(a), composed.column(a))?;
                }
            }
        }
        Ok(())
    });
    report.check("module-unit", || {
        let one = m.act(h.unit());
        for a in 0..m.dim() {
            expect_eq(&[a], one.column(a), LinearMap::identity(m.dim()).column(a))?;
        }
        Ok(())
    });
    report
}

/// `f ∘ (e_i ·) = (e_i ·) ∘ f` for every basis element.
pub fn is_module_map(f: &LinearMap, from: &HModule, to: &HModule) -> bool {
    from.actions().iter().zip(to.actions()).all(|(a, b)| f.compose(a) == b.compose(f))
}
