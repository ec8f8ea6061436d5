//! Husimi Q-densities for the coherent-state family `|(x,y), B, m>`.
//!
//! Everything depends on the phase-space point only through
//! `lambda = B (x^2 + y^2) / 2`, so densities are one-dimensional on
//! `[0, inf)`.

mod density;
mod husimi;
mod params;
mod wavefunction;

pub use density::{make_density, DensityKind, RadialDensity};
pub use husimi::{
    husimi_pure, husimi_thermal, husimi_thermal_series, husimi_zero_lambdas, husimi_zero_radii,
    lambda_of,
};
pub use params::{landau_energy, LevelParams, ThermalParams};
pub use wavefunction::{coherent_wavefunction, overlap_oracle};
