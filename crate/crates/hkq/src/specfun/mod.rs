//! Numerical kernel: complete elliptic integrals by AGM, Atiyah–Hitchin
//! metric coefficients, and adaptive quadrature for improper integrals.

pub mod ah;
pub mod elliptic;
pub mod quad;

pub use ah::{
    ah_params, ah_params_mc, ah_potential, ah_potential_lower_bound, ah_volume_density, AhParams,
};
pub use elliptic::{elliptic_e, elliptic_k, elliptic_ke_mc};
pub use quad::{integrate_adaptive, QuadResult};
