//! Exact verification of finite-dimensional weak Hopf algebras, their
//! quasitriangular structures and weak cocycles, and the braided Hopf
//! algebras obtained from them by transmutation and quantization.
#![no_std]

extern crate alloc;

pub mod category;
pub mod error;
pub mod linalg;
pub mod qt;
pub mod quantization;
pub mod report;
pub mod transmutation;
pub mod twisting;
pub mod weak_hopf;
pub mod zoo;

pub use error::Error;
pub use linalg::{LinearMap, Rational, SubspaceBasis};
pub use report::{Check, Observation, VerificationReport, Witness};
pub use weak_hopf::{QuantumGroupoid, WeakBialgebra};
