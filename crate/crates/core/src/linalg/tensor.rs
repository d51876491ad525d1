//! Operations on vectors of tensor products `V_1 ⊗ ... ⊗ V_k`, stored with
//! the last slot varying fastest. These apply maps to single slots without
//! materializing the full Kronecker product.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{zeros, LinearMap, Rational};

/// `a ⊗ b` as a coefficient vector.
pub fn outer(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = zeros(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

/// Views `v` as `[pre, mid, post]` and applies `a` (`rows × mid`) to the
/// middle block, i.e. computes `(id_pre ⊗ a ⊗ id_post) v`.
pub fn apply_block(v: &[Rational], pre: usize, mid: usize, post: usize, a: &LinearMap) -> Vec<Rational> {
    assert_eq!(v.len(), pre * mid * post, "apply_block: shape mismatch");
    assert_eq!(a.cols(), mid, "apply_block: map has {} columns, block has {}", a.cols(), mid);
    let out_mid = a.rows();
    let mut out = zeros(pre * out_mid * post);
    for p in 0..pre {
        for m in 0..mid {
            for q in 0..post {
                let x = &v[(p * mid + m) * post + q];
                if x.is_zero() {
                    continue;
                }
                for r in 0..out_mid {
                    let c = a.get(r, m);
                    if !c.is_zero() {
                        out[(p * out_mid + r) * post + q] += c * x;
                    }
                }
            }
        }
    }
    out
}

/// Applies `a` to slot `slot` of a tensor with slot dimensions `dims`.
pub fn apply_slot(v: &[Rational], dims: &[usize], slot: usize, a: &LinearMap) -> Vec<Rational> {
    let pre = dims[..slot].iter().product();
    let post = dims[slot + 1..].iter().product();
    apply_block(v, pre, dims[slot], post, a)
}

/// Applies `maps[k]` to slot `k` for every slot: `(A_1 ⊗ ... ⊗ A_k) v`.
pub fn apply_each(v: &[Rational], dims: &[usize], maps: &[&LinearMap]) -> Vec<Rational> {
    assert_eq!(dims.len(), maps.len());
    let mut cur = v.to_vec();
    let mut cur_dims = dims.to_vec();
    for (k, m) in maps.iter().enumerate() {
        cur = apply_slot(&cur, &cur_dims, k, m);
        cur_dims[k] = m.rows();
    }
    cur
}

/// Reorders slots: output slot `k` is input slot `perm[k]`.
pub fn permute(v: &[Rational], dims: &[usize], perm: &[usize]) -> Vec<Rational> {
    let k = dims.len();
    assert_eq!(perm.len(), k);
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    // strides of the input layout
    let mut in_stride = alloc::vec![1usize; k];
    for s in (0..k.saturating_sub(1)).rev() {
        in_stride[s] = in_stride[s + 1] * dims[s + 1];
    }
    let mut out = zeros(v.len());
    let mut idx = alloc::vec![0usize; k];
    for x in out.iter_mut() {
        let src: usize = idx.iter().enumerate().map(|(o, &i)| i * in_stride[perm[o]]).sum();
        *x = v[src].clone();
        // odometer over the output index
        for s in (0..k).rev() {
            idx[s] += 1;
            if idx[s] < out_dims[s] {
                break;
            }
            idx[s] = 0;
        }
    }
    out
}

/// Splits a flat index into per-slot indices.
pub fn unflatten(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = alloc::vec![0; dims.len()];
    for s in (0..dims.len()).rev() {
        out[s] = index % dims[s];
        index /= dims[s];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use alloc::vec;

    #[test]
    fn permute_swaps_two_slots() {
        // e_0 ⊗ e_1 in 2x3 -> e_1 ⊗ e_0 in 3x2
        let v = outer(&[int(1), int(0)], &[int(0), int(1), int(0)]);
        let w = permute(&v, &[2, 3], &[1, 0]);
        assert_eq!(w, outer(&[int(0), int(1), int(0)], &[int(1), int(0)]));
        assert_eq!(w, LinearMap::flip(2, 3).apply(&v));
    }

    #[test]
    fn apply_each_matches_kron() {
        let a = LinearMap::from_rows(&[vec![int(1), int(2)], vec![int(3), int(4)]]);
        let b = LinearMap::from_rows(&[vec![int(0), int(1)], vec![int(5), int(-1)]]);
        let v: Vec<Rational> = (1..=4).map(int).collect();
        assert_eq!(apply_each(&v, &[2, 2], &[&a, &b]), a.kron(&b).apply(&v));
    }

    #[test]
    fn unflatten_inverts_row_major() {
        assert_eq!(unflatten(5, &[2, 3]), vec![1, 2]);
    }
}
