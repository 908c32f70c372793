//! Spectral models for index computations, heat kernels on the line, and
//! flat-space identities for the Dirac operator.

mod flat;
mod heat;
mod spectral;

pub use flat::{flat_dirac_square, symbol_check, DiffPoly, SymbolCheck};
pub use heat::{
    bump, delta_limit_error, hermite_expansion, hermite_functions, line_heat_kernel, linspace, mehler_kernel,
    semigroup_residual, Quadrature, SemigroupReport,
};
pub use spectral::{
    dlambda_index, dlambda_model, mckean_singer_check, spectral_model, sphere2_hodge, torus2_hodge, torus_dirac,
    DlambdaIndex, Level, McKeanSinger, SpectralModel, SupertraceSample, TailBound, ROUNDING_TOL, ZERO_TOL,
};
