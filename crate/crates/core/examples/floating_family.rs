//! The one-parameter family of non-circular cross-sections that float in
//! neutral equilibrium at every orientation.
//!
//! A cylinder whose cross-section has radius of curvature
//! `ρ(α) = 1 + τ sin nα` floats at any orientation exactly at the contact
//! angles γ = π − δ for which the table carries the constant-angle
//! invariant circle at δ. Run with
//!
//! ```text
//! cargo run --example floating_family
//! ```

use caustics::conjecture::{conditional_classification, TableClass};
use caustics::curve::{omega_n_tau, FloatingAngles};

fn main() {
    let table = omega_n_tau(4, 0.5, (0.0, 0.0)).expect("tau < 1 keeps the table convex");
    println!("table: rho(a) = 1 + 0.5 sin 4a");
    println!("perimeter = {:.12}", table.perimeter());
    println!("area      = {:.12}", table.area());

    match table.floating_report(50).expect("scan succeeds") {
        FloatingAngles::AllAngles => println!("floats at every contact angle (a disc)"),
        FloatingAngles::Angles(list) => {
            println!("contact angles with neutral equilibrium at any orientation:");
            for c in &list {
                println!(
                    "  gamma = {:.15} rad  (caustic angle delta = {:.15}, order n = {})",
                    c.gamma, c.delta, c.n
                );
            }
            // the two angles are mirror images through pi/2
            let sum = list[0].gamma + list[1].gamma;
            println!("  gamma_1 + gamma_2 = {sum:.15} (= pi)");
        }
    }

    let report = conditional_classification(&table, 40).expect("classification succeeds");
    match report.class {
        TableClass::OmegaEquivalent { n, tau, deltas } => println!(
            "classification (conditional on disjointness certificates up to n_max={}): \
             single-harmonic family n={n}, tau={tau}, {} admissible angles",
            report.n_max,
            deltas.len()
        ),
        other => println!("classification: {other:?}"),
    }
}
