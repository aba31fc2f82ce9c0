//! Certified solutions of the angle equation chain.
//!
//! For each integer `n > 1` the equation
//!
//! ```text
//! sin((n-1)δ)/(n-1) = sin((n+1)δ)/(n+1),    0 < δ < π
//! ```
//!
//! has finitely many solutions. Away from δ = π/2 they coincide with the
//! solutions of `tan nδ = n tan δ`. This module solves the chain on
//! (0, π/2) with certified brackets, assembles the symmetric solution set
//! on (0, π), and exposes the pole-free residual shared with the caustic
//! kernel test in [`crate::curve`].

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

/// Largest admitted `n`; beyond this the argument reduction in
/// `sin((n±1)δ)` would need extended precision.
pub const MAX_N: u32 = 1 << 20;

/// Residual bound every certified root satisfies.
pub const ROOT_RESIDUAL_BOUND: f64 = 1e-12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrigrootsError {
    #[error("n must be at least 2, got {0}")]
    NTooSmall(u32),
    #[error("n = {0} exceeds the supported cap {MAX_N}")]
    NTooLarge(u32),
    /// A bracket guaranteed to contain a root showed no sign change.
    /// This cannot happen for correct inputs; it signals a bug.
    #[error("no sign change in bracket k = {k} for n = {n}")]
    MissingSignChange { n: u32, k: u32 },
}

/// A certified solution of `tan nx = n tan x` on (0, π/2).
///
/// `lo` and `hi` are the analytic bracket endpoints `kπ/n` and
/// `(2k+1)π/(2n)`; the root is strictly inside and its pole-free residual
/// is at most [`ROOT_RESIDUAL_BOUND`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BracketedRoot {
    pub n: u32,
    /// Branch index, 1-based.
    pub k: u32,
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
    pub residual: f64,
}

/// The full solution set on (0, π), symmetric under δ → π − δ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AngleSet {
    pub n: u32,
    /// Sorted members in (0, π); exactly `n − 2` of them.
    pub members: Vec<f64>,
    /// π/2 belongs to the set iff `n` is odd.
    pub includes_half_pi: bool,
}

/// The residual of the sine-quotient equation,
/// `sin((n−1)δ)/(n−1) − sin((n+1)δ)/(n+1)`.
///
/// Zero exactly when (n, δ) solves the equation. Identical to the Fourier
/// kernel transform used by the caustic decision; see
/// [`crate::curve::kernel_hat`].
pub fn sin_eq_residual(n: u32, delta: f64) -> f64 {
    let m = f64::from(n);
    ((m - 1.0) * delta).sin() / (m - 1.0) - ((m + 1.0) * delta).sin() / (m + 1.0)
}

/// Pole-free form used for refinement:
/// `g(x) = (n+1) sin((n−1)x) − (n−1) sin((n+1)x)`.
///
/// Same zeros as [`sin_eq_residual`], scaled by (n−1)(n+1); entire in x,
/// so bisection and Newton steps never meet a pole.
fn g(n: u32, x: f64) -> f64 {
    let m = f64::from(n);
    (m + 1.0) * ((m - 1.0) * x).sin() - (m - 1.0) * ((m + 1.0) * x).sin()
}

/// Derivative of [`g`]: `g'(x) = 2(n²−1) sin nx sin x`.
fn g_prime(n: u32, x: f64) -> f64 {
    let m = f64::from(n);
    2.0 * (m * m - 1.0) * (m * x).sin() * x.sin()
}

/// Number of solutions in (0, π/2): `n/2 − 1` for even `n`,
/// `(n−1)/2 − 1` for odd `n`.
pub fn count_bn(n: u32) -> u32 {
    if n.is_multiple_of(2) {
        n / 2 - 1
    } else {
        (n - 1) / 2 - 1
    }
}

fn refine_root(n: u32, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = g(n, lo);
    // Bisect until the bracket is essentially one ulp wide.
    for _ in 0..128 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = g(n, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_lo < 0.0) == (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    // A few Newton steps restore full double precision.
    let mut x = 0.5 * (lo + hi);
    for _ in 0..5 {
        let d = g_prime(n, x);
        if d == 0.0 {
            break;
        }
        let step = g(n, x) / d;
        let next = x - step;
        if !next.is_finite() || next <= lo - 1e-12 || next >= hi + 1e-12 {
            break;
        }
        x = next;
        if step.abs() < 1e-16 {
            break;
        }
    }
    x
}

fn solve_bn_uncached(n: u32) -> Result<Vec<BracketedRoot>, TrigrootsError> {
    if n < 2 {
        return Err(TrigrootsError::NTooSmall(n));
    }
    if n > MAX_N {
        return Err(TrigrootsError::NTooLarge(n));
    }
    let count = count_bn(n);
    let mut roots = Vec::with_capacity(count as usize);
    for k in 1..=count {
        let lo = f64::from(2 * k) * PI / f64::from(2 * n);
        let hi = f64::from(2 * k + 1) * PI / f64::from(2 * n);
        if g(n, lo).signum() == g(n, hi).signum() {
            return Err(TrigrootsError::MissingSignChange { n, k });
        }
        let value = refine_root(n, lo, hi);
        let residual = sin_eq_residual(n, value).abs();
        roots.push(BracketedRoot {
            n,
            k,
            lo,
            hi,
            value,
            residual,
        });
    }
    Ok(roots)
}

fn cache() -> &'static Mutex<HashMap<u32, Vec<BracketedRoot>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BracketedRoot>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All solutions of `tan nx = n tan x` in (0, π/2), one per bracket,
/// sorted ascending. Empty for n ∈ {2, 3}.
///
/// Results are cached per `n`; repeated queries are cheap.
pub fn solve_bn(n: u32) -> Result<Vec<BracketedRoot>, TrigrootsError> {
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let roots = solve_bn_uncached(n)?;
    cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| roots.clone());
    Ok(roots)
}

/// The solution set of the sine-quotient equation on (0, π):
/// the (0, π/2) roots, their reflections through π/2, and π/2 itself
/// when `n` is odd.
pub fn build_an(n: u32) -> Result<AngleSet, TrigrootsError> {
    let bn = solve_bn(n)?;
    let mut members: Vec<f64> = bn.iter().map(|r| r.value).collect();
    if n % 2 == 1 {
        members.push(PI / 2.0);
    }
    members.extend(bn.iter().rev().map(|r| PI - r.value));
    Ok(AngleSet {
        n,
        members,
        includes_half_pi: n % 2 == 1,
    })
}

/// Largest gap between consecutive members of the solution set,
/// with 0 and π adjoined. Bounded by 2π/n.
pub fn density_gap(n: u32) -> Result<f64, TrigrootsError> {
    let set = build_an(n)?;
    let mut prev = 0.0;
    let mut max_gap: f64 = 0.0;
    for &m in &set.members {
        max_gap = max_gap.max(m - prev);
        prev = m;
    }
    Ok(max_gap.max(PI - prev))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_at_special_points() {
        // odd n at π/2: both numerators vanish
        assert!(sin_eq_residual(5, PI / 2.0).abs() < 1e-15);
        // the closed-form root for n = 4
        let x4 = 5.0_f64.sqrt().atan();
        assert!(sin_eq_residual(4, x4).abs() < 1e-12);
        // direct evaluation at a non-root
        let expected = (3.0 * PI / 4.0).sin() / 3.0 - (5.0 * PI / 4.0).sin() / 5.0;
        assert!((sin_eq_residual(4, PI / 4.0) - expected).abs() < 1e-15);
        assert!(expected.abs() > 0.3);
    }

    #[test]
    fn small_n_has_no_roots() {
        assert!(solve_bn(2).unwrap().is_empty());
        assert!(solve_bn(3).unwrap().is_empty());
        assert_eq!(solve_bn(1), Err(TrigrootsError::NTooSmall(1)));
        assert_eq!(
            solve_bn(MAX_N + 1),
            Err(TrigrootsError::NTooLarge(MAX_N + 1))
        );
    }

    #[test]
    fn closed_forms_for_n4_n5() {
        let b4 = solve_bn(4).unwrap();
        assert_eq!(b4.len(), 1);
        let x4 = 5.0_f64.sqrt().atan();
        assert!((b4[0].value - x4).abs() < 1e-12);
        assert!(b4[0].lo >= PI / 4.0 - 1e-15 && b4[0].hi <= 3.0 * PI / 8.0 + 1e-15);

        let b5 = solve_bn(5).unwrap();
        assert_eq!(b5.len(), 1);
        let x5 = (5.0_f64 / 3.0).sqrt().atan();
        assert!((b5[0].value - x5).abs() < 1e-12);
        assert!(b5[0].value > PI / 4.0 && b5[0].value < 3.0 * PI / 10.0);
    }

    #[test]
    fn counts_follow_parity_formula() {
        for n in 2..=500 {
            let roots = solve_bn(n).unwrap();
            assert_eq!(roots.len() as u32, count_bn(n), "count mismatch at n={n}");
            for r in &roots {
                assert!(
                    r.lo < r.value && r.value < r.hi,
                    "bracket violated at n={n}"
                );
                assert!(
                    r.residual <= ROOT_RESIDUAL_BOUND,
                    "residual {} at n={n}",
                    r.residual
                );
            }
        }
    }

    #[test]
    fn tan_form_consistency() {
        for n in [4u32, 7, 12, 25, 100] {
            for r in solve_bn(n).unwrap() {
                let lhs = (f64::from(n) * r.value).tan();
                let rhs = f64::from(n) * r.value.tan();
                // away from poles the tan form agrees
                if lhs.abs() < 1e6 {
                    assert!(
                        (lhs - rhs).abs() <= 1e-8 * (1.0 + rhs.abs()),
                        "n={n} k={}",
                        r.k
                    );
                }
            }
        }
    }

    #[test]
    fn angle_set_is_symmetric_and_sized() {
        for n in 2..=60 {
            let set = build_an(n).unwrap();
            assert_eq!(set.members.len() as u32, n - 2, "|A_n| at n={n}");
            assert_eq!(set.includes_half_pi, n % 2 == 1);
            for w in set.members.windows(2) {
                assert!(w[0] < w[1], "not sorted at n={n}");
            }
            for &m in &set.members {
                let reflected = PI - m;
                assert!(
                    set.members.iter().any(|&x| (x - reflected).abs() < 1e-12),
                    "π−δ missing for δ={m} at n={n}"
                );
                assert!(sin_eq_residual(n, m).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn a3_and_a4() {
        let a3 = build_an(3).unwrap();
        assert_eq!(a3.members.len(), 1);
        assert!((a3.members[0] - PI / 2.0).abs() < 1e-15);

        let a4 = build_an(4).unwrap();
        let x4 = 5.0_f64.sqrt().atan();
        assert_eq!(a4.members.len(), 2);
        assert!((a4.members[0] - x4).abs() < 1e-12);
        assert!((a4.members[1] - (PI - x4)).abs() < 1e-12);

        assert!(build_an(2).unwrap().members.is_empty());
    }

    #[test]
    fn density_bound_holds() {
        for n in 2..=200 {
            let gap = density_gap(n).unwrap();
            assert!(
                gap <= 2.0 * PI / f64::from(n) + 1e-12,
                "gap {gap} exceeds 2π/{n}"
            );
        }
    }
}
