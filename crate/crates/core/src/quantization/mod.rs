//! Quantization of a cocommutative quantum groupoid `H` by a weak cocycle
//! `F`: `C_H(H_s)` becomes a Hopf algebra in `H`-modules with the
//! `F`-twisted tensor action and the `Φ` braiding.

mod quantize;
mod verify;

pub use quantize::quantize;
pub use verify::{four_factor_sides, verify_quantization};
