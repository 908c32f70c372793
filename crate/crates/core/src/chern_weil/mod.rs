//! Chern–Weil theory on constant-coefficient curvature models.

mod form;
mod genus;
mod models;
pub mod oracle;
pub mod sampling;

pub use form::{FormMatrix, FormPoly};
pub use genus::{
    chern_weil_argument, genus_eval, genus_expand, invariance_check, p1_trace_form, Family, Genus, GenusExpansion,
    GenusSeries,
};
pub use models::{parse_rational, CurvatureModel, Volume};

/// `B_k` with `B_1 = −1/2`.
pub use crate::series::bernoulli;
