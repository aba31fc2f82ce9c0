//! The chain of angle equations `tan nx = n tan x` on (0, π/2): certified
//! roots, the symmetric angle sets on (0, π), their density, and
//! continued-fraction evidence that the roots are irrational multiples
//! of π. Run with
//!
//! ```text
//! cargo run --example angle_chain
//! ```

use std::f64::consts::PI;

use caustics::conjecture::irrationality_evidence;
use caustics::trigroots::{build_an, density_gap, solve_bn};

fn main() {
    println!("order  roots  angle-set  density gap  bound 2*pi/n");
    for n in 2..=12u32 {
        let roots = solve_bn(n).unwrap();
        let an = build_an(n).unwrap();
        let gap = density_gap(n).unwrap();
        println!(
            "{n:>5}  {:>5}  {:>9}  {gap:>11.6}  {:>12.6}",
            roots.len(),
            an.members.len(),
            2.0 * PI / f64::from(n)
        );
    }

    println!("\ncertified roots for n = 4 and n = 5 (closed forms exist here):");
    for n in [4u32, 5] {
        for r in solve_bn(n).unwrap() {
            println!(
                "  n={n} k={} bracket=({:.6}, {:.6}) value={:.15} residual={:.2e}",
                r.k, r.lo, r.hi, r.value, r.residual
            );
        }
    }
    println!("  arctan(sqrt 5)    = {:.15}", 5.0_f64.sqrt().atan());
    println!(
        "  arctan(sqrt(5/3)) = {:.15}",
        (5.0_f64 / 3.0).sqrt().atan()
    );

    println!("\ncontinued-fraction evidence for root/pi (no small denominators):");
    for n in [4u32, 5, 8] {
        let report = irrationality_evidence(n, 1, 12).unwrap();
        let tail: Vec<String> = report
            .convergents
            .iter()
            .map(|(p, q)| format!("{p}/{q}"))
            .collect();
        println!(
            "  n={n}: value={:.12}, convergents: {}{}",
            report.value,
            tail.join(", "),
            if report.truncated {
                " …(truncated at the precision bound)"
            } else {
                ""
            }
        );
    }
}
