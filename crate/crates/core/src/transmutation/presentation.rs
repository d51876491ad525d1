use alloc::vec::Vec;

use crate::category::HModule;
use crate::linalg::{LinearMap, Rational, SubspaceBasis};
use crate::weak_hopf::QuantumGroupoid;

/// A Hopf algebra in a module category, on a carrier subspace `C` of an
/// ambient quantum groupoid. Maps act on canonical carrier coordinates
/// (dimension `c`) and on coordinates of `H_t` (dimension `t`):
///
/// | map | shape | domain → codomain |
/// |---|---|---|
/// | `mul` | `c × c²` | `C ⊗ C → C` |
/// | `unit` | `c × t` | `H_t → C` |
/// | `comul` | `c² × c` | `C → C ⊗ C` |
/// | `counit` | `t × c` | `C → H_t` |
/// | `antipode` | `c × c` | `C → C` |
///
/// `comul` is stored before truncation; the verifier checks that it already
/// lands in the truncated tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfPresentation {
    /// The quantum groupoid whose centralizer is the carrier.
    pub ambient: QuantumGroupoid,
    pub carrier: SubspaceBasis,
    pub target: SubspaceBasis,
    /// `H_t` coordinates of the unit of the acting algebra.
    pub target_one: Vec<Rational>,
    pub module: HModule,
    pub mul: LinearMap,
    pub unit: LinearMap,
    pub comul: LinearMap,
    pub counit: LinearMap,
    pub antipode: LinearMap,
}

impl BraidedHopfPresentation {
    pub fn carrier_dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target.dim()
    }

    /// Carrier coordinates of `η(1)`.
    pub fn one(&self) -> Vec<Rational> {
        self.unit.apply(&self.target_one)
    }

    /// Equality of every map and of the carrier, ignoring the ambient
    /// algebra's name.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.target == other.target
            && self.target_one == other.target_one
            && self.module.actions() == other.module.actions()
            && self.mul == other.mul
            && self.unit == other.unit
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}
