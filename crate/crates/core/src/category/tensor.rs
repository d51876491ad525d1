use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{LinearMap, Rational, SubspaceBasis};

use super::module::HModule;

type Sparse = Vec<(usize, usize, Rational)>;

fn sparse(m: &LinearMap) -> Sparse {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for (j, c) in m.row(i).iter().enumerate() {
            if !c.is_zero() {
                out.push((i, j, c.clone()));
            }
        }
    }
    out
}

/// `Σ x_ab ρ_M(e_a) ⊗ ρ_N(e_b)` on the plain tensor product `M ⊗ N`.
pub fn element2_action(x: &[Rational], m: &HModule, n: &HModule) -> LinearMap {
    let k = m.actions().len();
    let (dm, dn) = (m.dim(), n.dim());
    let d = dm * dn;
    let mut out = LinearMap::zeros(d, d);
    let sm: Vec<Sparse> = m.actions().iter().map(sparse).collect();
    let sn: Vec<Sparse> = n.actions().iter().map(sparse).collect();
    for (ab, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (ab / k, ab % k);
        for (i, j, u) in &sm[a] {
            let cu = c * u;
            for (p, q, w) in &sn[b] {
                let (r, s) = (i * dn + p, j * dn + q);
                let cur = out.get(r, s) + &cu * w;
                out.set(r, s, cur);
            }
        }
    }
    out
}

/// The truncated tensor product: the image of the projector given by the
/// action of `Δ(1)` on `M ⊗ N`, with the induced module structure in the
/// image's canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedTensor {
    left_dim: usize,
    right_dim: usize,
    projector: LinearMap,
    image: SubspaceBasis,
    action: Vec<LinearMap>,
}

impl TruncatedTensor {
    pub(crate) fn new(left_dim: usize, right_dim: usize, projector: LinearMap, plain_actions: &[LinearMap]) -> Self {
        let image = projector.image();
        let inc = image.inclusion();
        let read = image.coordinate_map();
        let action = plain_actions.iter().map(|a| read.compose(&a.compose(&inc))).collect();
        Self { left_dim, right_dim, projector, image, action }
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn projector(&self) -> &LinearMap {
        &self.projector
    }

    pub fn image(&self) -> &SubspaceBasis {
        &self.image
    }

    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    /// Plain tensor ← image coordinates.
    pub fn inclusion(&self) -> LinearMap {
        self.image.inclusion()
    }

    /// Image coordinates ← plain tensor, through the projector.
    pub fn projection(&self) -> LinearMap {
        self.image.coordinate_map().compose(&self.projector)
    }

    pub fn action(&self, i: usize) -> &LinearMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[LinearMap] {
        &self.action
    }

    pub fn as_module(&self, name: &str, algebra: &str) -> HModule {
        HModule::new(name, algebra, self.dim(), self.action.clone()).expect("induced action has image shape")
    }
}
