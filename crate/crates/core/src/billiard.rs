//! The billiard map on a Fourier table, its differential, and orbits on
//! constant-angle invariant circles.
//!
//! Phase coordinates are (α, θ): the tangent-direction parameter of the
//! base point and the outgoing angle against the positively oriented
//! boundary. A shot from α at angle θ travels along direction α + θ; the
//! landing parameter α₁ is the unique solution of the chord-direction
//! equation in (α, α + 2π), found by bracketed bisection with Newton
//! refinement. The landing angle is read back from geometry every step,
//! never re-projected, so orbit drift is a genuine error signal.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::curve::FourierCurve;

/// Shots closer than this to the tangent directions have no chord.
pub const TANGENTIAL_GUARD: f64 = 1e-12;

/// Chord-direction residual every accepted step satisfies, scaled by the
/// mean radius.
pub const CHORD_RESIDUAL_BOUND: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum BilliardError {
    #[error("phase point out of range: alpha = {alpha}, theta = {theta}")]
    InvalidPhasePoint { alpha: f64, theta: f64 },
    #[error("tangential shot: theta = {theta} is within {TANGENTIAL_GUARD} of the boundary")]
    TangentialShot { theta: f64 },
    #[error("chord solver stalled at residual {residual}")]
    SolverStall { residual: f64 },
    #[error("delta = {delta} is not a constant-angle caustic of this table")]
    NotACaustic { delta: f64 },
}

/// A point of the open phase cylinder: base parameter α in [0, 2π),
/// outgoing angle θ in (0, π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    alpha: f64,
    theta: f64,
}

impl PhasePoint {
    pub fn new(alpha: f64, theta: f64) -> Result<Self, BilliardError> {
        if !(alpha.is_finite() && theta.is_finite())
            || !(0.0..2.0 * PI).contains(&alpha)
            || theta <= 0.0
            || theta >= PI
        {
            return Err(BilliardError::InvalidPhasePoint { alpha, theta });
        }
        Ok(PhasePoint { alpha, theta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// One orbit sample: cumulative (unwrapped) α, outgoing angle, and the
/// base point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitRecord {
    pub step: u64,
    pub alpha: f64,
    pub theta: f64,
    pub x: f64,
    pub y: f64,
}

/// Outcome of iterating on a constant-angle invariant circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitSummary {
    pub start: PhasePoint,
    pub steps: u64,
    /// Winding fraction per step: (total α advance)/(2π · steps).
    pub rotation_estimate: f64,
    /// Largest observed |θ_k − θ_0| along the orbit.
    pub max_theta_drift: f64,
}

impl OrbitSummary {
    /// Drift beyond this level means the orbit left the invariant circle
    /// numerically; callers should report it.
    pub fn drift_warning(&self) -> bool {
        self.max_theta_drift > 1e-6
    }
}

/// The 2×2 differential of the billiard map in (s, θ) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BilliardJacobian {
    pub ds1_ds: f64,
    pub ds1_dtheta: f64,
    pub dtheta1_ds: f64,
    pub dtheta1_dtheta: f64,
}

impl BilliardJacobian {
    pub fn det(&self) -> f64 {
        self.ds1_ds * self.dtheta1_dtheta - self.ds1_dtheta * self.dtheta1_ds
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [
            [self.ds1_ds, self.ds1_dtheta],
            [self.dtheta1_ds, self.dtheta1_dtheta],
        ]
    }
}

/// Landing data of one shot, unwrapped: `alpha1` lies in (alpha, alpha + 2π).
#[derive(Debug, Clone, Copy)]
struct Landing {
    alpha1: f64,
    theta1: f64,
}

/// Chord-direction residual: the cross product of the chord from
/// `boundary_point(alpha)` to `boundary_point(xi)` with the unit ray
/// direction φ. Strictly decreasing in ξ on (φ, φ + π).
fn chord_residual(curve: &FourierCurve, base: (f64, f64), phi: f64, xi: f64) -> f64 {
    let p = curve.boundary_point(xi);
    let (sp, cp) = phi.sin_cos();
    (p.0 - base.0) * sp - (p.1 - base.1) * cp
}

fn shoot(curve: &FourierCurve, alpha: f64, theta: f64) -> Result<Landing, BilliardError> {
    if !(TANGENTIAL_GUARD..=PI - TANGENTIAL_GUARD).contains(&theta) {
        return Err(BilliardError::TangentialShot { theta });
    }
    let phi = alpha + theta;
    let base = curve.boundary_point(alpha);

    // the landing parameter is the unique zero in (φ, φ + π), where the
    // residual decreases monotonically from > 0 to < 0
    let mut lo = phi;
    let mut hi = phi + PI;
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if chord_residual(curve, base, phi, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut xi = 0.5 * (lo + hi);
    for _ in 0..8 {
        let r = chord_residual(curve, base, phi, xi);
        let dr = curve.eval_radius(xi) * (phi - xi).sin();
        if dr == 0.0 {
            break;
        }
        let step = r / dr;
        let next = xi - step;
        if !(lo - 1e-9..=hi + 1e-9).contains(&next) {
            break;
        }
        xi = next;
        if step.abs() < 1e-15 {
            break;
        }
    }
    let residual = chord_residual(curve, base, phi, xi).abs();
    if residual > CHORD_RESIDUAL_BOUND * curve.c0().max(1.0) {
        return Err(BilliardError::SolverStall { residual });
    }
    Ok(Landing {
        alpha1: xi,
        theta1: xi - phi,
    })
}

/// One application of the billiard map. The returned base parameter is
/// reduced to [0, 2π); use [`run_orbit`] when cumulative winding matters.
pub fn billiard_step(curve: &FourierCurve, p: PhasePoint) -> Result<PhasePoint, BilliardError> {
    let landing = shoot(curve, p.alpha, p.theta)?;
    PhasePoint::new(landing.alpha1.rem_euclid(2.0 * PI), landing.theta1)
}

/// The differential of the billiard map at `p`, in (s, θ) coordinates,
/// with curvature read exactly from the Fourier form (κ = 1/ρ).
pub fn billiard_jacobian(
    curve: &FourierCurve,
    p: PhasePoint,
) -> Result<BilliardJacobian, BilliardError> {
    let landing = shoot(curve, p.alpha, p.theta)?;
    let a = curve.boundary_point(p.alpha);
    let b = curve.boundary_point(landing.alpha1);
    let l = (b.0 - a.0).hypot(b.1 - a.1);
    let kappa = 1.0 / curve.eval_radius(p.alpha);
    let kappa1 = 1.0 / curve.eval_radius(landing.alpha1);
    let sin_t = p.theta.sin();
    let sin_t1 = landing.theta1.sin();
    Ok(BilliardJacobian {
        ds1_ds: (kappa * l - sin_t) / sin_t1,
        ds1_dtheta: l / sin_t1,
        dtheta1_ds: (kappa * kappa1 * l - kappa * sin_t1 - kappa1 * sin_t) / sin_t1,
        dtheta1_dtheta: (kappa1 * l - sin_t1) / sin_t1,
    })
}

/// Iterate the map, recording every collision with unwrapped α.
///
/// Record 0 is the starting point; `steps` further records follow. The
/// solver always works on the wrapped parameter — trigonometric
/// arguments stay small however long the orbit — while the records carry
/// the accumulated winding.
pub fn run_orbit(
    curve: &FourierCurve,
    start: PhasePoint,
    steps: u64,
) -> Result<Vec<OrbitRecord>, BilliardError> {
    let mut records = Vec::with_capacity(steps as usize + 1);
    let mut cumulative = start.alpha;
    let mut wrapped = start.alpha;
    let mut theta = start.theta;
    let p0 = curve.boundary_point(wrapped);
    records.push(OrbitRecord {
        step: 0,
        alpha: cumulative,
        theta,
        x: p0.0,
        y: p0.1,
    });
    for step in 1..=steps {
        let landing = shoot(curve, wrapped, theta)?;
        cumulative += landing.alpha1 - wrapped;
        wrapped = landing.alpha1.rem_euclid(2.0 * PI);
        theta = landing.theta1;
        let p = curve.boundary_point(wrapped);
        records.push(OrbitRecord {
            step,
            alpha: cumulative,
            theta,
            x: p.0,
            y: p.1,
        });
    }
    Ok(records)
}

/// Iterate on the invariant circle at angle δ from α = 0 and summarize
/// rotation and drift. Fails if the table does not carry that caustic.
pub fn iterate_on_caustic(
    curve: &FourierCurve,
    delta: f64,
    steps: u64,
) -> Result<OrbitSummary, BilliardError> {
    if !curve.has_constant_caustic(delta).exists {
        return Err(BilliardError::NotACaustic { delta });
    }
    let start = PhasePoint::new(0.0, delta)?;
    let records = run_orbit(curve, start, steps.max(1))?;
    summarize(start, &records)
}

/// Rotation and drift statistics of a recorded orbit.
pub fn summarize(
    start: PhasePoint,
    records: &[OrbitRecord],
) -> Result<OrbitSummary, BilliardError> {
    let steps = records.len() as u64 - 1;
    let winding = records.last().unwrap().alpha - records[0].alpha;
    let max_theta_drift = records
        .iter()
        .map(|r| (r.theta - start.theta).abs())
        .fold(0.0, f64::max);
    Ok(OrbitSummary {
        start,
        steps,
        rotation_estimate: winding / (2.0 * PI * steps as f64),
        max_theta_drift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{omega_n_tau, FourierCurve, Harmonic};

    fn constant_width_curve() -> FourierCurve {
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
            (0.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn phase_point_validation() {
        assert!(PhasePoint::new(0.0, PI / 2.0).is_ok());
        assert!(PhasePoint::new(-0.1, 1.0).is_err());
        assert!(PhasePoint::new(2.0 * PI, 1.0).is_err());
        assert!(PhasePoint::new(1.0, 0.0).is_err());
        assert!(PhasePoint::new(1.0, PI).is_err());
    }

    #[test]
    fn disc_step_advances_by_two_theta() {
        let disc = FourierCurve::unit_circle();
        for (alpha, theta) in [(0.2, PI / 2.0), (1.5, 0.4), (5.0, 2.2)] {
            let p = PhasePoint::new(alpha, theta).unwrap();
            let q = billiard_step(&disc, p).unwrap();
            let expect = (alpha + 2.0 * theta).rem_euclid(2.0 * PI);
            assert!((q.alpha() - expect).abs() < 1e-12, "alpha at θ={theta}");
            assert!((q.theta() - theta).abs() < 1e-12, "theta at θ={theta}");
        }
    }

    #[test]
    fn tangential_shot_is_rejected() {
        let disc = FourierCurve::unit_circle();
        // the phase point itself is legal; the solver refuses the shot
        let p = PhasePoint::new(0.0, 5e-13).unwrap();
        assert!(matches!(
            billiard_step(&disc, p),
            Err(BilliardError::TangentialShot { .. })
        ));
        let q = PhasePoint::new(0.0, PI - 5e-13).unwrap();
        assert!(matches!(
            billiard_step(&disc, q),
            Err(BilliardError::TangentialShot { .. })
        ));
    }

    #[test]
    fn caustic_angle_is_preserved() {
        let om = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
        let x4 = 5.0_f64.sqrt().atan();
        for i in 0..100 {
            let alpha = 2.0 * PI * (i as f64) / 100.0;
            let p = PhasePoint::new(alpha, x4).unwrap();
            let q = billiard_step(&om, p).unwrap();
            assert!((q.theta() - x4).abs() <= 1e-9, "drift at α={alpha}");
        }
    }

    #[test]
    fn disc_jacobian_closed_form() {
        let disc = FourierCurve::unit_circle();
        let p = PhasePoint::new(0.3, PI / 2.0).unwrap();
        let j = billiard_jacobian(&disc, p).unwrap();
        // diameter chord: l = 2, κ = 1
        assert!((j.ds1_ds - 1.0).abs() < 1e-10);
        assert!((j.ds1_dtheta - 2.0).abs() < 1e-10);
        assert!((j.dtheta1_dtheta - 1.0).abs() < 1e-10);
        assert!((j.det() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn jacobian_det_equals_sine_ratio() {
        let om = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
        for (alpha, theta) in [(0.1, 0.7), (2.0, 1.9), (4.5, 2.6), (3.0, 0.3)] {
            let p = PhasePoint::new(alpha, theta).unwrap();
            let q = billiard_step(&om, p).unwrap();
            let j = billiard_jacobian(&om, p).unwrap();
            let expected = theta.sin() / q.theta().sin();
            assert!((j.det() - expected).abs() < 1e-10);
            assert!(j.ds1_dtheta > 0.0, "twist must be positive");
        }
    }

    #[test]
    fn involution_inverts_the_map() {
        let om = omega_n_tau(5, 0.35, (0.0, 0.0)).unwrap();
        for (alpha, theta) in [(0.4, 1.0), (2.7, 2.0), (5.5, 0.6)] {
            let p = PhasePoint::new(alpha, theta).unwrap();
            let q = billiard_step(&om, p).unwrap();
            let reversed = PhasePoint::new(q.alpha(), PI - q.theta()).unwrap();
            let back = billiard_step(&om, reversed).unwrap();
            let alpha_err = (back.alpha() - alpha).rem_euclid(2.0 * PI);
            let alpha_err = alpha_err.min(2.0 * PI - alpha_err);
            assert!(alpha_err < 1e-9);
            assert!((back.theta() - (PI - theta)).abs() < 1e-9);
        }
    }

    #[test]
    fn rotation_on_disc() {
        let disc = FourierCurve::unit_circle();
        let summary = iterate_on_caustic(&disc, 0.7, 1000).unwrap();
        assert!((summary.rotation_estimate - 0.7 / PI).abs() < 1e-9);
        assert!(summary.max_theta_drift < 1e-10);
        assert!(!summary.drift_warning());
    }

    #[test]
    fn rotation_on_constant_width_is_half() {
        let cw = constant_width_curve();
        let summary = iterate_on_caustic(&cw, PI / 2.0, 100).unwrap();
        assert!((summary.rotation_estimate - 0.5).abs() < 1e-12);
        assert!(summary.max_theta_drift <= 1e-10);
    }

    #[test]
    fn non_caustic_angle_is_refused() {
        let om = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
        assert!(matches!(
            iterate_on_caustic(&om, PI / 4.0, 10),
            Err(BilliardError::NotACaustic { .. })
        ));
    }

    #[test]
    fn orbit_records_are_consistent() {
        let om = omega_n_tau(4, 0.5, (0.0, 0.0)).unwrap();
        let x4 = 5.0_f64.sqrt().atan();
        let start = PhasePoint::new(0.0, x4).unwrap();
        let records = run_orbit(&om, start, 50).unwrap();
        assert_eq!(records.len(), 51);
        for w in records.windows(2) {
            let advance = w[1].alpha - w[0].alpha;
            assert!(advance > 0.0 && advance < 2.0 * PI);
            // on the caustic the advance is exactly 2δ
            assert!((advance - 2.0 * x4).abs() < 1e-9);
        }
        for r in &records {
            let p = om.boundary_point(r.alpha);
            assert!((p.0 - r.x).abs() < 1e-12 && (p.1 - r.y).abs() < 1e-12);
        }
    }
}
