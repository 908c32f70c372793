//! Computational spin geometry: Clifford algebras and their classification,
//! spin groups and spinors, Chern–Weil characteristic classes, Čech `Z₂`
//! obstruction theory, and spectral checks of index-theoretic identities.

pub mod clifford;
pub mod error;
pub mod scalar;
pub mod classification;
pub mod linalg;
pub mod series;
pub mod spin;
pub mod chern_weil;
pub mod cech;
pub mod index_lab;
pub mod selftest;
