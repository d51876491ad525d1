use alloc::vec::Vec;

use crate::linalg::{LinearMap, SubspaceBasis};
use crate::weak_hopf::QuantumGroupoid;

/// `C_L(L_s) = {l : lx = xl for all x ∈ L_s}`, as the kernel of the stacked
/// commutator maps `l ↦ lx - xl` over a basis of `L_s`.
pub fn centralizer(l: &QuantumGroupoid) -> SubspaceBasis {
    let n = l.dim();
    let source = l.source_subalgebra();
    let blocks: Vec<LinearMap> = source.vectors().iter().map(|x| l.right_mul(x).sub(&l.left_mul(x))).collect();
    let rows: Vec<Vec<_>> = blocks.iter().flat_map(|b| (0..b.rows()).map(move |i| b.row(i).to_vec())).collect();
    if rows.is_empty() {
        return SubspaceBasis::whole(n);
    }
    LinearMap::from_rows(&rows).kernel_basis()
}
