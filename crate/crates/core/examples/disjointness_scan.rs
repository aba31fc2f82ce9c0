//! Exact pairwise disjointness certificates.
//!
//! Distinct orders m ≠ n are conjectured never to share a caustic angle;
//! equivalently the reduced circle polynomials are conjectured coprime.
//! An integer gcd settles each pair outright: a constant gcd is a proof
//! of disjointness for that pair. Run with
//!
//! ```text
//! cargo run --example disjointness_scan
//! ```

use caustics::conjecture::{
    pair_disjointness, scan_disjointness, small_k_numeric_check, PairFamily,
};

fn main() {
    let n_max = 20;
    let certs = scan_disjointness(n_max).unwrap();
    let disjoint = certs.iter().filter(|c| c.is_disjoint()).count();
    println!(
        "scanned {} pairs with 4 <= m < n <= {n_max}: {disjoint} disjoint, {} shared",
        certs.len(),
        certs.len() - disjoint
    );
    println!("first few ledger lines:");
    for c in certs.iter().take(6) {
        println!("  {}", c.ledger_line());
    }

    // pairs settled by elementary arguments, corroborated numerically
    println!("\nelementary families for n = 4..8 (min distance between root sets):");
    for n in 4..=8u32 {
        for family in [
            PairFamily::NextOrder,
            PairFamily::Double,
            PairFamily::DoublePlusOne,
        ] {
            let partner = family.partner(n);
            let dist = small_k_numeric_check(n, family).unwrap();
            let cert = pair_disjointness(n.min(partner), n.max(partner)).unwrap();
            println!(
                "  ({n:>2}, {partner:>2}): distance = {dist:.6}, exact verdict = {}",
                if cert.is_disjoint() {
                    "disjoint"
                } else {
                    "SHARED"
                }
            );
        }
    }
}
