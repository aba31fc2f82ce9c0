//! Orbits on a constant-angle invariant circle and the structure of the
//! billiard map differential.
//!
//! On the invariant circle the base parameter advances by exactly 2δ per
//! bounce, so the rotation number is δ/π. The differential is an
//! area-preserving twist map: det J = sinθ/sinθ₁ and ∂s₁/∂θ > 0. Run with
//!
//! ```text
//! cargo run --example billiard_orbit
//! ```

use std::f64::consts::PI;

use caustics::billiard::{billiard_jacobian, billiard_step, iterate_on_caustic, PhasePoint};
use caustics::curve::{omega_n_tau, FourierCurve, Harmonic};
use caustics::trigroots::solve_bn;

fn main() {
    let table = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
    let delta = solve_bn(4).unwrap()[0].value;

    let summary = iterate_on_caustic(&table, delta, 10_000).unwrap();
    println!("10000-step orbit at delta = {delta:.15}:");
    println!("  rotation estimate = {:.15}", summary.rotation_estimate);
    println!("  delta / pi        = {:.15}", delta / PI);
    println!("  max angle drift   = {:.3e}", summary.max_theta_drift);

    // the constant-width table bounces between antipodes: rotation 1/2
    let cw = FourierCurve::new(
        1.0,
        vec![
            Harmonic {
                k: 3,
                a: 0.3,
                b: 0.0,
            },
            Harmonic {
                k: 5,
                a: 0.0,
                b: 0.1,
            },
        ],
        (0.0, 0.0),
    )
    .unwrap();
    let half = iterate_on_caustic(&cw, PI / 2.0, 100).unwrap();
    println!(
        "constant-width table at pi/2: rotation = {} (diameters, period two)",
        half.rotation_estimate
    );

    // differential structure at a few phase points
    println!("differential at sample phase points:");
    for (alpha, theta) in [(0.3, 0.9), (2.1, 1.7), (4.9, 0.4)] {
        let p = PhasePoint::new(alpha, theta).unwrap();
        let jac = billiard_jacobian(&table, p).unwrap();
        let q = billiard_step(&table, p).unwrap();
        println!(
            "  ({alpha:.1}, {theta:.1}): det J = {:.12}, sin(theta)/sin(theta1) = {:.12}, twist = {:.6}",
            jac.det(),
            theta.sin() / q.theta().sin(),
            jac.ds1_dtheta
        );
    }
}
