//! Strictly convex planar tables as Fourier data of the radius of curvature.
//!
//! A table is stored as `ρ(α) = c0 + Σ (a_k cos kα + b_k sin kα)` over a
//! finite set of harmonic indices `k ≥ 2`, with α the tangent-direction
//! parameter. The boundary embedding integrates `x' = ρ cos α`,
//! `y' = ρ sin α` termwise in closed form, so geometry carries no
//! quadrature error. The caustic decision reduces to a kernel transform
//! on the active harmonics.
//!
//! Angles δ in (0, π) name constant-angle invariant circles; δ and π − δ
//! describe the same geometric caustic traversed with opposite
//! orientations. We always work with δ ∈ (0, π) and leave the
//! identification to callers.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trigroots::{self, TrigrootsError};

/// Default grid for the convexity fallback check.
pub const CONVEXITY_GRID: usize = 4096;

/// Default absolute tolerance for caustic decisions, applied to the
/// kernel transform scaled by the harmonic amplitude.
pub const DEFAULT_CAUSTIC_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum CurveError {
    #[error("mean radius of curvature must be positive and finite, got {0}")]
    BadMeanRadius(f64),
    #[error(
        "harmonic index {0} is not representable (closure forbids k = 1, k = 0 belongs in c0)"
    )]
    BadHarmonicIndex(u32),
    #[error("duplicate harmonic index {0}")]
    DuplicateHarmonic(u32),
    #[error("harmonic coefficient is not finite")]
    NonFiniteCoefficient,
    #[error("curve is not strictly convex: min ρ = {min_rho}")]
    NotConvex { min_rho: f64 },
    #[error("omega family requires n > 3, got {0}")]
    OmegaSmallN(u32),
    #[error(transparent)]
    Trigroots(#[from] TrigrootsError),
}

/// One trigonometric term of the radius of curvature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    pub k: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    pub fn amplitude(&self) -> f64 {
        self.a.hypot(self.b)
    }
}

/// A strictly convex table given by the Fourier expansion of its radius
/// of curvature.
///
/// Invariants enforced at construction: `c0 > 0`, all harmonic indices
/// distinct and ≥ 2, and `min ρ > 0`. Zero-amplitude harmonics are
/// dropped, so `harmonics()` lists exactly the active terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CurveRecord", into = "CurveRecord")]
pub struct FourierCurve {
    c0: f64,
    harmonics: Vec<Harmonic>,
    anchor: (f64, f64),
}

/// Serialization schema: `{c0, anchor, harmonics: [(k, a, b)]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct CurveRecord {
    c0: f64,
    anchor: (f64, f64),
    harmonics: Vec<Harmonic>,
}

impl TryFrom<CurveRecord> for FourierCurve {
    type Error = CurveError;
    fn try_from(rec: CurveRecord) -> Result<Self, CurveError> {
        FourierCurve::new(rec.c0, rec.harmonics, rec.anchor)
    }
}

impl From<FourierCurve> for CurveRecord {
    fn from(c: FourierCurve) -> CurveRecord {
        CurveRecord {
            c0: c.c0,
            anchor: c.anchor,
            harmonics: c.harmonics,
        }
    }
}

/// Decision record for constant-angle caustic existence at a given δ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CausticReport {
    pub delta: f64,
    pub exists: bool,
    /// Largest amplitude-scaled kernel value over active harmonics.
    pub residual: f64,
    /// Active harmonic indices whose kernel value exceeds the tolerance.
    pub offenders: Vec<u32>,
    /// An active harmonic index realizing the caustic condition, when the
    /// curve is noncircular and the decision is positive.
    pub matched_n: Option<u32>,
}

/// Contact angles at which a table floats in neutral equilibrium at any
/// orientation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum FloatingAngles {
    /// Circular cross-section: every contact angle works.
    AllAngles,
    /// Discrete set of contact angles γ = π − δ, each with its caustic
    /// angle δ and the harmonic order that admits it.
    Angles(Vec<ContactAngle>),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContactAngle {
    pub gamma: f64,
    pub delta: f64,
    pub n: u32,
}

impl FourierCurve {
    /// Validated constructor. Harmonics are sorted by index; zero terms
    /// are dropped. Convexity uses the certified bound
    /// `c0 − Σ amp_k > 0` first and falls back to a grid minimum with
    /// local refinement.
    pub fn new(c0: f64, harmonics: Vec<Harmonic>, anchor: (f64, f64)) -> Result<Self, CurveError> {
        Self::with_grid(c0, harmonics, anchor, CONVEXITY_GRID)
    }

    /// As [`FourierCurve::new`] with an explicit fallback grid size.
    pub fn with_grid(
        c0: f64,
        mut harmonics: Vec<Harmonic>,
        anchor: (f64, f64),
        grid: usize,
    ) -> Result<Self, CurveError> {
        if !(c0.is_finite() && c0 > 0.0) {
            return Err(CurveError::BadMeanRadius(c0));
        }
        if !(anchor.0.is_finite() && anchor.1.is_finite()) {
            return Err(CurveError::NonFiniteCoefficient);
        }
        harmonics.retain(|h| !(h.a == 0.0 && h.b == 0.0));
        for h in &harmonics {
            if h.k < 2 {
                return Err(CurveError::BadHarmonicIndex(h.k));
            }
            if !(h.a.is_finite() && h.b.is_finite()) {
                return Err(CurveError::NonFiniteCoefficient);
            }
        }
        harmonics.sort_by_key(|h| h.k);
        for w in harmonics.windows(2) {
            if w[0].k == w[1].k {
                return Err(CurveError::DuplicateHarmonic(w[0].k));
            }
        }
        let curve = FourierCurve {
            c0,
            harmonics,
            anchor,
        };
        let amp_sum: f64 = curve.harmonics.iter().map(Harmonic::amplitude).sum();
        if c0 - amp_sum > 0.0 {
            return Ok(curve);
        }
        let min_rho = curve.min_radius(grid.max(16));
        if min_rho > 0.0 {
            Ok(curve)
        } else {
            Err(CurveError::NotConvex { min_rho })
        }
    }

    /// The unit disc anchored at the origin.
    pub fn unit_circle() -> Self {
        FourierCurve {
            c0: 1.0,
            harmonics: Vec::new(),
            anchor: (0.0, 0.0),
        }
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn harmonics(&self) -> &[Harmonic] {
        &self.harmonics
    }

    pub fn anchor(&self) -> (f64, f64) {
        self.anchor
    }

    pub fn is_circular(&self) -> bool {
        self.harmonics.is_empty()
    }

    /// ρ(α).
    pub fn eval_radius(&self, alpha: f64) -> f64 {
        let mut rho = self.c0;
        for h in &self.harmonics {
            let ka = f64::from(h.k) * alpha;
            rho += h.a * ka.cos() + h.b * ka.sin();
        }
        rho
    }

    /// dρ/dα, used by the convexity refinement.
    fn eval_radius_deriv(&self, alpha: f64) -> f64 {
        let mut d = 0.0;
        for h in &self.harmonics {
            let k = f64::from(h.k);
            let ka = k * alpha;
            d += k * (h.b * ka.cos() - h.a * ka.sin());
        }
        d
    }

    /// Minimum of ρ over a dense grid, Newton-refined near the smallest
    /// grid sample.
    pub fn min_radius(&self, grid: usize) -> f64 {
        let mut best = f64::INFINITY;
        let mut best_alpha = 0.0;
        for i in 0..grid {
            let alpha = 2.0 * PI * (i as f64) / (grid as f64);
            let r = self.eval_radius(alpha);
            if r < best {
                best = r;
                best_alpha = alpha;
            }
        }
        // refine the minimum: Newton on ρ' around the best sample
        let mut alpha = best_alpha;
        for _ in 0..32 {
            let d1 = self.eval_radius_deriv(alpha);
            let h = 1e-6;
            let d2 =
                (self.eval_radius_deriv(alpha + h) - self.eval_radius_deriv(alpha - h)) / (2.0 * h);
            if d2.abs() < 1e-12 {
                break;
            }
            let step = d1 / d2;
            alpha -= step;
            if step.abs() < 1e-14 {
                break;
            }
        }
        best.min(self.eval_radius(alpha))
    }

    /// Boundary point at tangent direction α, from the closed-form
    /// antiderivative of (ρ cos α, ρ sin α).
    pub fn boundary_point(&self, alpha: f64) -> (f64, f64) {
        let (sa, ca) = alpha.sin_cos();
        let mut x = self.anchor.0 + self.c0 * sa;
        let mut y = self.anchor.1 - self.c0 * ca;
        for h in &self.harmonics {
            let kp = f64::from(h.k) + 1.0;
            let km = f64::from(h.k) - 1.0;
            let (sp, cp) = (kp * alpha).sin_cos();
            let (sm, cm) = (km * alpha).sin_cos();
            x += h.a * (sp / kp + sm / km) / 2.0 - h.b * (cp / kp + cm / km) / 2.0;
            y += h.a * (cm / km - cp / kp) / 2.0 + h.b * (sm / km - sp / kp) / 2.0;
        }
        (x, y)
    }

    /// Arc length from α = 0, the closed-form antiderivative of ρ.
    pub fn arc_length(&self, alpha: f64) -> f64 {
        let mut s = self.c0 * alpha;
        for h in &self.harmonics {
            let k = f64::from(h.k);
            let (sk, ck) = (k * alpha).sin_cos();
            s += (h.a * sk - h.b * (ck - 1.0)) / k;
        }
        s
    }

    /// Perimeter, `2π c0` exactly.
    pub fn perimeter(&self) -> f64 {
        2.0 * PI * self.c0
    }

    /// Distance between the boundary points at α and α + π, the width of
    /// the table in direction α + π/2.
    pub fn width(&self, alpha: f64) -> f64 {
        let p = self.boundary_point(alpha);
        let q = self.boundary_point(alpha + PI);
        (p.0 - q.0).hypot(p.1 - q.1)
    }

    /// True iff all active harmonics have odd index; cross-checked on a
    /// grid against `ρ(α) + ρ(α+π) = 2 c0`.
    pub fn is_constant_width(&self, tol: f64) -> bool {
        let exact = self.harmonics.iter().all(|h| h.k % 2 == 1);
        let grid = 1024;
        let mut max_dev: f64 = 0.0;
        for i in 0..grid {
            let alpha = 2.0 * PI * (i as f64) / (grid as f64);
            let dev = self.eval_radius(alpha) + self.eval_radius(alpha + PI) - 2.0 * self.c0;
            max_dev = max_dev.max(dev.abs());
        }
        exact && max_dev <= tol
    }

    /// Enclosed area via the boundary line integral `½∮(x dy − y dx)`.
    ///
    /// The integrand is a trigonometric polynomial, so the uniform
    /// rectangle rule is exact once the node count exceeds its degree.
    pub fn area(&self) -> f64 {
        let k_max = self.harmonics.last().map_or(0, |h| h.k) as usize;
        let nodes = (4 * k_max + 64).next_power_of_two();
        let mut sum = 0.0;
        for i in 0..nodes {
            let alpha = 2.0 * PI * (i as f64) / (nodes as f64);
            let (x, y) = self.boundary_point(alpha);
            let rho = self.eval_radius(alpha);
            let (sa, ca) = alpha.sin_cos();
            // x y' − y x' with x' = ρ cos α, y' = ρ sin α
            sum += x * rho * sa - y * rho * ca;
        }
        0.5 * sum * 2.0 * PI / (nodes as f64)
    }

    /// Kernel decision for the constant-angle caustic at δ, with the
    /// default tolerance.
    pub fn has_constant_caustic(&self, delta: f64) -> CausticReport {
        self.has_constant_caustic_tol(delta, DEFAULT_CAUSTIC_TOL)
    }

    /// Kernel decision at an explicit tolerance: the caustic exists iff
    /// every active harmonic k has `amp_k·|kernel_hat(k, δ)| ≤ tol`
    /// (and the circle admits every caustic).
    pub fn has_constant_caustic_tol(&self, delta: f64, tol: f64) -> CausticReport {
        let mut offenders = Vec::new();
        let mut residual: f64 = 0.0;
        let mut matched_n = None;
        for h in &self.harmonics {
            let scaled = (kernel_hat(h.k, delta) * h.amplitude()).abs();
            residual = residual.max(scaled);
            if scaled > tol {
                offenders.push(h.k);
            } else if matched_n.is_none() {
                matched_n = Some(h.k);
            }
        }
        let exists = offenders.is_empty() && (self.is_circular() || matched_n.is_some());
        if !exists {
            matched_n = None;
        }
        CausticReport {
            delta,
            exists,
            residual,
            offenders,
            matched_n,
        }
    }

    /// Maximum over an α-grid of the caustic identity integral
    /// `∫_{α−δ}^{α+δ} ρ(ξ) sin(α−ξ) dξ`, evaluated per harmonic in
    /// closed form (the constant term integrates to zero).
    pub fn caustic_residual(&self, delta: f64) -> f64 {
        let grid = 1024;
        let mut worst: f64 = 0.0;
        for i in 0..grid {
            let alpha = 2.0 * PI * (i as f64) / (grid as f64);
            let mut integral = 0.0;
            for h in &self.harmonics {
                let ka = f64::from(h.k) * alpha;
                // ∫ = (a_k sin kα − b_k cos kα) · kernel_hat(k, δ)
                integral += (h.a * ka.sin() - h.b * ka.cos()) * kernel_hat(h.k, delta);
            }
            worst = worst.max(integral.abs());
        }
        worst
    }

    /// Every contact angle γ = π − δ with δ drawn from the solution sets
    /// up to `n_max` at which this table floats in neutral equilibrium in
    /// any orientation.
    pub fn floating_report(&self, n_max: u32) -> Result<FloatingAngles, CurveError> {
        if self.is_circular() {
            return Ok(FloatingAngles::AllAngles);
        }
        let mut angles: Vec<ContactAngle> = Vec::new();
        let mut push = |gamma: f64, delta: f64, n: u32| {
            if !angles.iter().any(|c| (c.delta - delta).abs() < 1e-12) {
                angles.push(ContactAngle { gamma, delta, n });
            }
        };
        for n in 2..=n_max.max(2) {
            for &delta in &trigroots::build_an(n)?.members {
                if self.has_constant_caustic(delta).exists {
                    push(PI - delta, delta, n);
                }
            }
        }
        // constant-width tables always float at the right angle, even if
        // n_max was too small to reach an odd solution set
        if self.is_constant_width(1e-10) && self.has_constant_caustic(PI / 2.0).exists {
            push(PI / 2.0, PI / 2.0, 3);
        }
        angles.sort_by(|p, q| p.gamma.total_cmp(&q.gamma));
        Ok(FloatingAngles::Angles(angles))
    }
}

/// The Fourier transform of the caustic kernel at harmonic `n`:
/// `sin((n−1)δ)/(n−1) − sin((n+1)δ)/(n+1)`.
///
/// The caustic at angle δ tolerates exactly the harmonics this transform
/// kills. Same function as [`trigroots::sin_eq_residual`].
pub fn kernel_hat(n: u32, delta: f64) -> f64 {
    trigroots::sin_eq_residual(n, delta)
}

/// The one-parameter deformation of the unit disc with
/// `ρ(α) = 1 + τ sin nα`.
///
/// Requires `n > 3` (smaller orders admit no nontrivial caustic angles)
/// and `0 ≤ τ < 1` (strict convexity). For deliberately degenerate
/// low-order tables see [`omega_n_tau_any_n`].
pub fn omega_n_tau(n: u32, tau: f64, anchor: (f64, f64)) -> Result<FourierCurve, CurveError> {
    if n <= 3 {
        return Err(CurveError::OmegaSmallN(n));
    }
    omega_n_tau_any_n(n, tau, anchor)
}

/// [`omega_n_tau`] without the `n > 3` guard; negative-testing hook for
/// orders whose caustic angle set is empty.
pub fn omega_n_tau_any_n(n: u32, tau: f64, anchor: (f64, f64)) -> Result<FourierCurve, CurveError> {
    FourierCurve::new(
        1.0,
        vec![Harmonic {
            k: n,
            a: 0.0,
            b: tau,
        }],
        anchor,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega45() -> FourierCurve {
        omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap()
    }

    #[test]
    fn radius_evaluation() {
        let circle = FourierCurve::unit_circle();
        assert_eq!(circle.eval_radius(1.234), 1.0);

        let om = omega45();
        assert!((om.eval_radius(0.0) - 1.0).abs() < 1e-15);
        assert!((om.eval_radius(PI / 8.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn omega_constructor_guards() {
        assert_eq!(
            omega_n_tau(4, 1.0, (0.0, 0.0)),
            Err(CurveError::NotConvex { min_rho: 0.0 })
        );
        assert_eq!(
            omega_n_tau(3, 0.5, (0.0, 0.0)),
            Err(CurveError::OmegaSmallN(3))
        );
        // the unguarded path accepts low orders for negative tests
        assert!(omega_n_tau_any_n(3, 0.5, (0.0, 0.0)).is_ok());
        // τ = 0 degenerates to the circle
        let c = omega_n_tau(4, 0.0, (0.0, 0.0)).unwrap();
        assert!(c.is_circular());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            FourierCurve::new(
                1.0,
                vec![Harmonic {
                    k: 1,
                    a: 0.1,
                    b: 0.0
                }],
                (0.0, 0.0)
            ),
            Err(CurveError::BadHarmonicIndex(1))
        ));
        assert!(matches!(
            FourierCurve::new(0.0, vec![], (0.0, 0.0)),
            Err(CurveError::BadMeanRadius(_))
        ));
        assert!(matches!(
            FourierCurve::new(
                1.0,
                vec![
                    Harmonic {
                        k: 4,
                        a: 0.1,
                        b: 0.0
                    },
                    Harmonic {
                        k: 4,
                        a: 0.0,
                        b: 0.1
                    }
                ],
                (0.0, 0.0)
            ),
            Err(CurveError::DuplicateHarmonic(4))
        ));
    }

    #[test]
    fn convexity_grid_fallback() {
        // amplitude sum ≥ c0 but still convex: sin3α + sin5α = 2sin4α cosα
        // peaks near 1.857, so τ = 0.52 keeps min ρ ≈ 0.034 > 0 while the
        // certified bound 1 − 2τ fails
        let c = FourierCurve::new(
            1.0,
            vec![
                Harmonic {
                    k: 3,
                    a: 0.0,
                    b: 0.52,
                },
                Harmonic {
                    k: 5,
                    a: 0.0,
                    b: 0.52,
                },
            ],
            (0.0, 0.0),
        );
        assert!(c.is_ok(), "{c:?}");
        // genuinely nonconvex
        let bad = FourierCurve::new(
            1.0,
            vec![Harmonic {
                k: 4,
                a: 0.0,
                b: 1.05,
            }],
            (0.0, 0.0),
        );
        assert!(matches!(bad, Err(CurveError::NotConvex { .. })));
    }

    #[test]
    fn boundary_of_circle() {
        let circle = FourierCurve::unit_circle();
        for alpha in [0.0, 0.7, 2.3, 5.9] {
            let (x, y) = circle.boundary_point(alpha);
            assert!((x - alpha.sin()).abs() < 1e-15);
            assert!((y + alpha.cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn boundary_derivative_matches_radius() {
        // d/dα boundary_point = ρ(α)(cos α, sin α), checked by central
        // differences; this pins the antiderivative signs
        let om = omega_n_tau(4, 0.3, (0.2, -0.1)).unwrap();
        let h = 1e-6;
        for alpha in [0.0, 0.3, 1.1, 2.9, 4.4] {
            let p = om.boundary_point(alpha + h);
            let m = om.boundary_point(alpha - h);
            let dx = (p.0 - m.0) / (2.0 * h);
            let dy = (p.1 - m.1) / (2.0 * h);
            let rho = om.eval_radius(alpha);
            assert!((dx - rho * alpha.cos()).abs() < 1e-8);
            assert!((dy - rho * alpha.sin()).abs() < 1e-8);
        }
    }

    #[test]
    fn boundary_closes() {
        let curves = [
            FourierCurve::unit_circle(),
            omega45(),
            FourierCurve::new(
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
                (1.0, 2.0),
            )
            .unwrap(),
        ];
        for c in &curves {
            for alpha in [0.0, 0.4, 1.9, 3.3] {
                let p = c.boundary_point(alpha);
                let q = c.boundary_point(alpha + 2.0 * PI);
                assert!((p.0 - q.0).hypot(p.1 - q.1) < 1e-12);
            }
        }
    }

    #[test]
    fn omega4_anchor_offset_at_zero() {
        // closed-form antiderivative at α = 0 for ρ = 1 + τ sin 4α:
        // x(0) = ξ0 − τ/(2·3) − τ/(2·5) = ξ0 − 4τ/15, y(0) = η0 − 1
        let tau = 0.5;
        let om = omega_n_tau(4, tau, (2.0, 7.0)).unwrap();
        let (x, y) = om.boundary_point(0.0);
        assert!((x - (2.0 - 4.0 * tau / 15.0)).abs() < 1e-15);
        assert!((y - 6.0).abs() < 1e-15);
    }

    #[test]
    fn arc_length_matches_quadrature() {
        let om = omega_n_tau(5, 0.4, (0.0, 0.0)).unwrap();
        let alpha = 2.1;
        let n = 100_000;
        let mut s = 0.0;
        for i in 0..n {
            let a = alpha * (i as f64 + 0.5) / (n as f64);
            s += om.eval_radius(a) * alpha / (n as f64);
        }
        assert!((s - om.arc_length(alpha)).abs() < 1e-8);
        assert!((om.arc_length(2.0 * PI) - om.perimeter()).abs() < 1e-12);
    }

    #[test]
    fn perimeter_is_spectral() {
        assert!((FourierCurve::unit_circle().perimeter() - 2.0 * PI).abs() < 1e-15);
        assert!((omega45().perimeter() - 2.0 * PI).abs() < 1e-15);
        let c = FourierCurve::new(
            2.5,
            vec![Harmonic {
                k: 7,
                a: 0.4,
                b: 0.1,
            }],
            (0.0, 0.0),
        )
        .unwrap();
        assert!((c.perimeter() - 5.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn width_constant_iff_odd_harmonics() {
        let circle = FourierCurve::unit_circle();
        assert!((circle.width(0.3) - 2.0).abs() < 1e-14);

        let cw = FourierCurve::new(
            1.0,
            vec![Harmonic {
                k: 3,
                a: 0.3,
                b: 0.0,
            }],
            (0.0, 0.0),
        )
        .unwrap();
        let grid = 1024;
        for i in 0..grid {
            let alpha = 2.0 * PI * (i as f64) / (grid as f64);
            assert!((cw.width(alpha) - 2.0).abs() < 1e-12);
        }
        assert!(cw.is_constant_width(1e-10));

        let om = omega45();
        assert!(!om.is_constant_width(1e-10));
        // width² = 4 − (8τ/15)sin4α + τ²(34/225 + (2/15)cos8α) for this
        // family, so α = 0 and α = π/4 coincide; π/8 separates them
        assert!((om.width(0.0) - om.width(PI / 8.0)).abs() > 1e-2);
        assert!((om.width(0.0) - om.width(PI / 4.0)).abs() < 1e-12);

        let mixed = FourierCurve::new(
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
        assert!(mixed.is_constant_width(1e-10));
    }

    #[test]
    fn area_of_discs_and_width_window() {
        assert!((FourierCurve::unit_circle().area() - PI).abs() < 1e-10);
        let disc2 = FourierCurve::new(2.0, vec![], (3.0, -1.0)).unwrap();
        assert!((disc2.area() - 4.0 * PI).abs() < 1e-10);

        let cw = FourierCurve::new(
            1.0,
            vec![Harmonic {
                k: 3,
                a: 0.3,
                b: 0.0,
            }],
            (0.0, 0.0),
        )
        .unwrap();
        let w = cw.width(0.0);
        let area = cw.area();
        assert!(area >= (PI - 3.0_f64.sqrt()) / 2.0 * w * w - 1e-10);
        assert!(area <= PI / 4.0 * w * w + 1e-10);
    }

    #[test]
    fn kernel_hat_special_values() {
        // odd n at π/2
        for n in [3u32, 5, 9, 101] {
            assert!(kernel_hat(n, PI / 2.0).abs() < 1e-13);
        }
        // n = 4 at arctan √5
        assert!(kernel_hat(4, 5.0_f64.sqrt().atan()).abs() < 1e-12);
        // π/4 kills nothing
        for n in 2..=500 {
            assert!(kernel_hat(n, PI / 4.0).abs() > 0.0);
        }
    }

    #[test]
    fn caustic_decision_for_omega4() {
        let om = omega45();
        let x4 = 5.0_f64.sqrt().atan();

        let good = om.has_constant_caustic(x4);
        assert!(good.exists);
        assert_eq!(good.matched_n, Some(4));
        assert!(good.offenders.is_empty());

        let bad = om.has_constant_caustic(PI / 4.0);
        assert!(!bad.exists);
        assert_eq!(bad.offenders, vec![4]);
        assert!(bad.matched_n.is_none());

        let circle = FourierCurve::unit_circle();
        let always = circle.has_constant_caustic(0.7);
        assert!(always.exists);
        assert!(always.matched_n.is_none());
    }

    #[test]
    fn caustic_residual_closed_form() {
        let om = omega45();
        let x4 = 5.0_f64.sqrt().atan();
        assert!(om.caustic_residual(x4) <= 1e-12);
        assert!(om.caustic_residual(PI / 4.0) > 1e-3);
        let circle = FourierCurve::unit_circle();
        assert_eq!(circle.caustic_residual(0.9), 0.0);
    }

    #[test]
    fn floating_angles() {
        let om = omega45();
        let x4 = 5.0_f64.sqrt().atan();
        match om.floating_report(50).unwrap() {
            FloatingAngles::Angles(list) => {
                assert_eq!(list.len(), 2);
                assert!((list[0].gamma - x4).abs() < 1e-12);
                assert!((list[1].gamma - (PI - x4)).abs() < 1e-12);
            }
            FloatingAngles::AllAngles => panic!("Ω is not circular"),
        }

        let cw = FourierCurve::new(
            1.0,
            vec![Harmonic {
                k: 3,
                a: 0.3,
                b: 0.0,
            }],
            (0.0, 0.0),
        )
        .unwrap();
        match cw.floating_report(10).unwrap() {
            FloatingAngles::Angles(list) => {
                assert!(list.iter().any(|c| (c.gamma - PI / 2.0).abs() < 1e-12));
            }
            FloatingAngles::AllAngles => panic!("not circular"),
        }

        assert_eq!(
            FourierCurve::unit_circle().floating_report(10).unwrap(),
            FloatingAngles::AllAngles
        );
    }

    #[test]
    fn serialization_round_trips() {
        let om = FourierCurve::new(
            1.25,
            vec![
                Harmonic {
                    k: 3,
                    a: 0.125,
                    b: -0.0625,
                },
                Harmonic {
                    k: 7,
                    a: 0.1,
                    b: 0.757575757575,
                },
            ],
            (0.5, -2.25),
        )
        .unwrap();
        let json = serde_json::to_string(&om).unwrap();
        let back: FourierCurve = serde_json::from_str(&json).unwrap();
        assert_eq!(om, back);
        // invalid payloads are rejected by the validated constructor
        let bad = r#"{"c0":1.0,"anchor":[0.0,0.0],"harmonics":[{"k":1,"a":0.1,"b":0.0}]}"#;
        assert!(serde_json::from_str::<FourierCurve>(bad).is_err());
    }
}
