//! Pin and Spin groups, the spinor representation, and the exterior algebra
//! as a Clifford module.

mod exterior;
mod group;
mod spinor;

pub use exterior::{berezin_supertrace_exp, BerezinComparison, ExteriorModule};
pub use group::{
    adjoint_matrix, lie_action_matrix, lie_iso, lie_iso_inv, random_float_unit, random_rational_unit,
    reflection_formula, spin_rotation, spin_rotation_exact, twisted_adjoint, wedge_matrix, SpinElement,
};
pub use spinor::{ChiralitySplit, SpinorSpace};
pub(crate) use spinor::scale;
