//! Numerical laboratory for exponential sums over the ordinates of the
//! nontrivial Riemann zeta zeros.
//!
//! The crate computes zero tables from scratch (or ingests published ones),
//! evaluates the sums `Σ_{γ<x} γ^{-iτ}` and `Σ_{x≤γ<y} γ^{-iτ}` with
//! compensated deterministic summation, and checks them against closed-form
//! main terms, stationary-phase approximations, contour integrals of ζ'/ζ,
//! the Dirichlet series `G(s) = Σ γ^{-s}` with its explicit continuation to
//! `σ > 0`, and a truncated Perron inversion with an explicit error bound.
//!
//! Everything is plain `f64`; supported heights top out at `t = 10^6`.

pub mod asymptotics;
pub mod error;
pub mod gseries;
pub mod harness;
pub mod oscillatory;
pub mod primes;
mod quad;
pub mod special;
pub mod sums;
pub mod zeros;

pub use error::{Error, Result};
pub use special::{Estimate, EvalConfig};
pub use sums::SumResult;
pub use zeros::{RangeQuery, ZeroTable};

/// Largest height any operation will touch.
pub const MAX_HEIGHT: f64 = 1.0e6;
