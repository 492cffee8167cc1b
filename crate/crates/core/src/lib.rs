//! Convex plane curves through the Fourier series of their support function.
//!
//! A curve is stored as a truncated trigonometric polynomial
//! `p(θ) = a0 + Σ (a_n cos nθ + b_n sin nθ)` where `θ` is the angle of the
//! outward normal. Everything else in the crate is computed from those
//! coefficients:
//!
//! - [`support`]: pointwise evaluation of `p`, `p'`, `p''`, the curvature
//!   radius `ρ = p + p''`, points on the curve and on its evolute.
//! - [`functionals`]: perimeter, area, evolute area, `∫ρ²` and `max ρ²`
//!   in closed form, plus the Steiner point and Steiner disc.
//! - [`quadrature`]: the same integrals by the periodic trapezoid rule,
//!   used as an independent oracle.
//! - [`inequalities`]: the four-parameter deficit
//!   `α∫ρ² + βL² + λA + δ|Ã|`, its cone conditions and named instances.
//! - [`stability`]: distances to the Steiner disc and the bounds that
//!   control them by the deficit.
//! - [`generators`]: named and random curves, parameter sampling and
//!   point-cloud fitting.
//! - [`fuzz`]: the randomized invariant campaign.

#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod functionals;
pub mod fuzz;
pub mod generators;
pub mod inequalities;
pub mod io;
pub mod quadrature;
pub mod scan;
pub mod stability;
pub mod support;

pub use error::{Error, Result};
pub use functionals::{compute_all, CurveFunctionals};
pub use inequalities::{ConeStatus, DeficitReport, IneqParams, Preset};
pub use stability::StabilityReport;
pub use support::{PlanePoint, SupportFourier};
