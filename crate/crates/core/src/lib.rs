//! Billiard tables with constant-angle caustics and the cross-sections of
//! cylinders that float in neutral equilibrium at every orientation.
//!
//! A convex planar table admits a constant-angle invariant circle at
//! angle δ exactly when a cylinder with that cross-section floats in
//! neutral equilibrium at any orientation with contact angle π − δ. This
//! crate implements the full reduction at desk scale:
//!
//! - [`curve`] — tables as Fourier data of the radius of curvature,
//!   boundary geometry, and the kernel test deciding caustic existence;
//! - [`billiard`] — the billiard map, its differential, and orbits on
//!   constant-angle invariant circles;
//! - [`trigroots`] — certified solutions of `tan nx = n tan x`, the
//!   equation governing the admissible angles;
//! - [`polychain`] — the exact integer polynomial chain behind the
//!   trigonometric equations and its unit-circle root structure;
//! - [`conjecture`] — finite-range certificates: exact gcd disjointness
//!   scans, special-angle exclusions, and continued-fraction evidence;
//! - [`cli`] — the `caustics` command-line front end with deterministic
//!   text, delimited, JSON, and SVG output.
//!
//! Start with the runnable programs under `examples/`; each one walks
//! through a single capability end to end.

pub mod billiard;
pub mod cli;
pub mod conjecture;
pub mod curve;
pub mod polychain;
pub mod trigroots;

pub use billiard::{billiard_jacobian, billiard_step, iterate_on_caustic, PhasePoint};
pub use curve::{omega_n_tau, CausticReport, FourierCurve, Harmonic};
pub use polychain::IntPolynomial;
pub use trigroots::{build_an, solve_bn, BracketedRoot};
