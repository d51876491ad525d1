//! Twisting a quasitriangular quantum groupoid by a weak cocycle, and the
//! isomorphism between the quantized centralizer and the transmuted
//! centralizer of the twist.

mod alpha;
mod iso;
mod pair;

pub use alpha::{alpha_alternative, alpha_ambient, alpha_inverse_ambient, alpha_map, check_alpha, AlphaMaps};
pub use iso::{check_category_identification, verify_isomorphism, IsomorphismOutcome};
pub use pair::{check_twist_element_identities, twist, twisted_r, TwistedPair};
