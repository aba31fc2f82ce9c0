//! Tables of constant width: the π/2 caustic, the perimeter identity,
//! and the area window.
//!
//! A table carries the right-angle caustic exactly when its radius of
//! curvature has only odd harmonics, which is the same as having
//! constant width. Such cross-sections float in neutral equilibrium at
//! any orientation with a right contact angle. Run with
//!
//! ```text
//! cargo run --example constant_width
//! ```

use std::f64::consts::PI;

use caustics::billiard::iterate_on_caustic;
use caustics::curve::{FourierCurve, Harmonic};

fn main() {
    let table = FourierCurve::new(
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
    println!("table: rho(a) = 1 + 0.3 cos 3a + 0.1 sin 5a (odd spectrum)");

    let mut min_w = f64::INFINITY;
    let mut max_w = f64::NEG_INFINITY;
    for i in 0..1024 {
        let w = table.width(2.0 * PI * (i as f64) / 1024.0);
        min_w = min_w.min(w);
        max_w = max_w.max(w);
    }
    println!("width over 1024 directions: [{min_w:.15}, {max_w:.15}]");
    println!("constant width: {}", table.is_constant_width(1e-10));

    let w = table.width(0.0);
    println!(
        "perimeter identity: pi * w = {:.15}, perimeter = {:.15}",
        PI * w,
        table.perimeter()
    );

    let area = table.area();
    let lower = (PI - 3.0_f64.sqrt()) / 2.0 * w * w;
    let upper = PI / 4.0 * w * w;
    println!("area = {area:.12}, window for width {w}: [{lower:.12}, {upper:.12}]");

    let report = table.has_constant_caustic(PI / 2.0);
    println!(
        "right-angle caustic: exists = {}, integral residual = {:.3e}",
        report.exists,
        table.caustic_residual(PI / 2.0)
    );

    let orbit = iterate_on_caustic(&table, PI / 2.0, 100).unwrap();
    println!(
        "orbit at pi/2: rotation = {} (chords are diameters), drift = {:.3e}",
        orbit.rotation_estimate, orbit.max_theta_drift
    );

    // contrast: one even harmonic destroys constant width
    let bent = FourierCurve::new(
        1.0,
        vec![Harmonic {
            k: 4,
            a: 0.0,
            b: 0.3,
        }],
        (0.0, 0.0),
    )
    .unwrap();
    println!(
        "\ncontrast rho = 1 + 0.3 sin 4a: constant width = {}, pi/2 caustic = {}",
        bent.is_constant_width(1e-10),
        bent.has_constant_caustic(PI / 2.0).exists
    );
}
