//! Exact arithmetic in `Cl_{p,q}` and its complexification.

mod blade;
mod multivector;
mod parse;
mod signature;

pub use blade::{blade_mul, Blade};
pub use multivector::{metric, volume_element, ExactMultivector, FloatMultivector, Multivector, Parity};
pub use signature::Signature;
