//! Čech cohomology with `Z₂` coefficients on nerves of good covers.

pub mod gf2;
mod nerve;
mod stiefel_whitney;

pub use nerve::{Cochain, Nerve};
pub use stiefel_whitney::{
    brute_force_count, signs_from_json, spin_structures, torus_anticommuting_lifts, w1, w2, OrbitCertificate,
    SpinLifts, SpinStructures, W1Class, W2Class,
};
