//! Deciding whether a table carries a constant-angle caustic, three ways.
//!
//! The kernel route inspects each active harmonic; the integral route
//! evaluates the caustic identity in closed form; the dynamical route
//! shoots billiard orbits and watches the outgoing angle. All three must
//! agree. Run with
//!
//! ```text
//! cargo run --example caustic_check
//! ```

use std::f64::consts::PI;

use caustics::billiard::{billiard_step, PhasePoint};
use caustics::curve::omega_n_tau;
use caustics::trigroots::solve_bn;

fn main() {
    let table = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
    let delta = solve_bn(4).unwrap()[0].value; // arctan sqrt(5)
    println!("table: rho(a) = 1 + 0.5 sin 4a");
    println!("candidate angle delta = {delta:.15} (= arctan sqrt 5)");

    // 1. kernel decision on the active harmonics
    let report = table.has_constant_caustic(delta);
    println!(
        "kernel:   exists = {}, matched order = {:?}, residual = {:.3e}",
        report.exists, report.matched_n, report.residual
    );

    // 2. closed-form integral residual (zero iff the caustic exists)
    println!("integral: residual = {:.3e}", table.caustic_residual(delta));

    // 3. dynamics: the outgoing angle survives a bounce from anywhere
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let alpha = 2.0 * PI * (i as f64) / 1000.0;
        let p = PhasePoint::new(alpha, delta).unwrap();
        let q = billiard_step(&table, p).unwrap();
        worst = worst.max((q.theta() - delta).abs());
    }
    println!("dynamics: max |theta_1 - delta| over 1000 bounces = {worst:.3e}");

    // negative control: pi/4 admits no caustic on any noncircular table
    let control = table.has_constant_caustic(PI / 4.0);
    println!(
        "control at pi/4: exists = {}, offenders = {:?}, integral residual = {:.3e}",
        control.exists,
        control.offenders,
        table.caustic_residual(PI / 4.0)
    );
}
