//! The exact integer polynomial chain and the road from tangent roots to
//! unit-circle roots.
//!
//! `tan nx = P_n(tan x)/Q_n(tan x)`; the combination `R_n = P_n − nzQ_n`
//! vanishes at z = tan x for solutions of the angle equation; the Möbius
//! map `x = −(z−i)/(z+i)` carries those z onto the unit circle where they
//! are the roots of the anti-palindromic `S_n`. Run with
//!
//! ```text
//! cargo run --example polynomial_chain
//! ```

use caustics::polychain::{
    export_line, mobius_root_map, pq_pair, r_poly, reduced_s_poly, s_poly, s_roots_on_circle,
};
use caustics::trigroots::solve_bn;

fn main() {
    println!("recurrence pairs (ascending coefficients):");
    for n in 1..=5u32 {
        let (p, q) = pq_pair(n);
        println!("  {}", export_line("P", n, &p));
        println!("  {}", export_line("Q", n, &q));
    }

    println!("\ntangent-root polynomials and their circle form:");
    for n in 4..=6u32 {
        println!("  {}", export_line("R", n, &r_poly(n)));
        println!("  {}", export_line("S", n, &s_poly(n)));
        println!("  {}", export_line("Sred", n, &reduced_s_poly(n).unwrap()));
    }

    // the full chain at n = 4: angle -> tangent -> circle
    let xi = solve_bn(4).unwrap()[0].value;
    let z = xi.tan();
    let x = mobius_root_map(z);
    println!("\nchain at n = 4:");
    println!("  angle    xi = {xi:.15}");
    println!(
        "  tangent  z  = {z:.15}  (R_4(z) = {:.2e})",
        r_poly(4).eval_f64(z)
    );
    println!(
        "  circle   x  = {:.15} + {:.15} i  (|x| = {:.15})",
        x.re,
        x.im,
        x.norm()
    );
    println!("  exact form  = (-2 + i sqrt 5)/3");

    let set = s_roots_on_circle(4).unwrap();
    println!(
        "  circle-root angles of S_4: {:?} (residuals {:.1e}, {:.1e})",
        set.phis, set.residuals[0], set.residuals[1]
    );
}
