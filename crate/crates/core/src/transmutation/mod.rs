//! Transmutation: a quasitriangular quantum groupoid `H` mapping into `L`
//! turns the centralizer `C_L(L_s)` into a Hopf algebra in `H`-modules.

mod centralizer;
mod morphism;
mod presentation;
mod transmute;
mod verify;

pub use centralizer::centralizer;
pub use morphism::{check_morphism, QGMorphism};
pub use presentation::BraidedHopfPresentation;
pub(crate) use transmute::{coords_or, tensor_coords_or};
pub use transmute::{self_transmute, transmute};
pub use verify::verify_braided_hopf;
