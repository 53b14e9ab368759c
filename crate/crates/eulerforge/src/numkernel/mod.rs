//! Precision management, constants, special values and series acceleration.

pub mod accel;
pub mod asym;
pub mod bernoulli;
pub mod constants;
pub mod context;
pub mod real;
pub mod zeta;

pub use accel::{accel_alternating, accel_geometric_tail, euler_maclaurin_tail};
pub use asym::{Expansion, Mono};
pub use bernoulli::bernoulli;
pub use constants::{const_log2, const_pi, const_sqrt, euler_gamma, expansion_order};
pub use context::PrecisionContext;
pub use real::Real;
pub use zeta::{alt_double_zeta_s1, eta, eta_conv, polylog, zeta, zeta_conv};
