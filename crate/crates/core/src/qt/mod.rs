//! Quasitriangular structures and weak invertible unit 2-cocycles.

mod cocycle;
mod inverse;
mod quasitriangular;

pub use cocycle::{check_weak_cocycle, twist_elements, twisted_algebra, TwistElements, WeakCocycle};
pub use quasitriangular::{
    canonical_r, check_drinfeld_element, check_quasitriangular, derived_r_identities, drinfeld_element,
    DrinfeldElement, QTStructure,
};
