//! Finite-range verification machinery for the root-disjointness and
//! irrationality conjectures.
//!
//! Whether two orders m ≠ n can share a caustic angle reduces to whether
//! the reduced polynomials share a complex root. An exact integer gcd of
//! the reduced pair settles each instance: a constant gcd is a proof of
//! disjointness for that pair. Nothing here claims anything beyond the
//! scanned range — reports carry their bound explicitly.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::curve::FourierCurve;
use crate::polychain::{reduced_s_poly, IntPolynomial, PolychainError};
use crate::trigroots::{self, TrigrootsError};

/// Continued-fraction claims stop once denominators pass this bound;
/// beyond it the expansion would outrun double-precision input.
pub const CF_DENOMINATOR_BOUND: i64 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum ConjectureError {
    #[error("pair requires 4 <= m < n, got ({m}, {n})")]
    BadPair { m: u32, n: u32 },
    #[error("scan bound must be at least 4, got {0}")]
    BadScanBound(u32),
    #[error("no root with index k = {k} exists for n = {n}")]
    NoSuchRoot { n: u32, k: u32 },
    #[error(transparent)]
    Polychain(#[from] PolychainError),
    #[error(transparent)]
    Trigroots(#[from] TrigrootsError),
}

/// Outcome of one exact pairwise gcd.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Verdict {
    /// Constant gcd: the complex root sets are provably disjoint.
    Disjoint,
    /// Nonconstant gcd: shared roots exist; listed as (re, im) pairs.
    /// This would falsify the disjointness conjectures.
    Shared { roots: Vec<(f64, f64)> },
}

/// Exact decision record for one pair of orders.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GcdCertificate {
    pub m: u32,
    pub n: u32,
    /// Primitive, sign-normalized gcd of the reduced polynomials.
    pub gcd: IntPolynomial,
    pub verdict: Verdict,
}

impl GcdCertificate {
    pub fn is_disjoint(&self) -> bool {
        matches!(self.verdict, Verdict::Disjoint)
    }

    /// Ledger line: `m n verdict gcd-degree`.
    pub fn ledger_line(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Disjoint => "disjoint",
            Verdict::Shared { .. } => "shared",
        };
        format!(
            "{} {} {} {}",
            self.m,
            self.n,
            verdict,
            self.gcd.degree().unwrap_or(0)
        )
    }
}

/// Gcd of two integer polynomials by the subresultant
/// polynomial-remainder sequence, returned primitive with positive
/// leading coefficient.
pub fn subresultant_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    if a.is_zero() {
        return b.primitive_part().normalize_sign();
    }
    if b.is_zero() {
        return a.primitive_part().normalize_sign();
    }
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut psi = BigInt::one();
    let mut beta_h = BigInt::one();
    loop {
        let delta = f.degree().unwrap() - g.degree().unwrap();
        let (_, r) = f.pseudo_div_rem(&g);
        if r.is_zero() {
            return g.primitive_part().normalize_sign();
        }
        if r.degree() == Some(0) {
            return IntPolynomial::constant(1);
        }
        // subresultant scaling keeps intermediate coefficients small
        let divisor = &beta_h * pow_bigint(&psi, delta);
        let reduced = r
            .exact_div_scalar(&divisor)
            .expect("subresultant divisor must divide exactly");
        f = g;
        g = reduced;
        beta_h = f.leading().unwrap().clone();
        psi = if delta == 0 {
            psi
        } else {
            let num = pow_bigint(&beta_h, delta);
            let den = pow_bigint(&psi, delta - 1);
            if den.is_zero() {
                num
            } else {
                num / den
            }
        };
    }
}

fn pow_bigint(base: &num_bigint::BigInt, exp: usize) -> num_bigint::BigInt {
    use num_traits::One;
    let mut acc = num_bigint::BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Exact disjointness decision for a pair of distinct orders ≥ 4.
/// Argument order does not matter; the certificate is canonicalized to
/// m < n.
///
/// A `Disjoint` verdict is a proof for that pair. A `Shared` verdict
/// surfaces the common roots and would falsify the conjecture.
pub fn pair_disjointness(m: u32, n: u32) -> Result<GcdCertificate, ConjectureError> {
    let (m, n) = (m.min(n), m.max(n));
    if m < 4 || n == m {
        return Err(ConjectureError::BadPair { m, n });
    }
    let sm = reduced_s_poly(m)?;
    let sn = reduced_s_poly(n)?;
    let gcd = subresultant_gcd(&sm, &sn);
    // the certificate is only valid if the gcd divides both inputs
    debug_assert!(sm.primitive_part().exact_div(&gcd).is_ok());
    debug_assert!(sn.primitive_part().exact_div(&gcd).is_ok());
    let verdict = if gcd.degree() == Some(0) {
        Verdict::Disjoint
    } else {
        Verdict::Shared {
            roots: shared_circle_roots(m, &gcd)?,
        }
    };
    Ok(GcdCertificate { m, n, gcd, verdict })
}

/// Roots of a nonconstant gcd, located among the circle roots of the
/// smaller order.
fn shared_circle_roots(m: u32, gcd: &IntPolynomial) -> Result<Vec<(f64, f64)>, ConjectureError> {
    let set = crate::polychain::s_roots_on_circle(m)?;
    let mut roots = Vec::new();
    for &phi in &set.phis {
        let x = num_complex::Complex64::new(phi.cos(), phi.sin());
        if gcd.eval_complex(x).norm() < 1e-6 {
            roots.push((x.re, x.im));
        }
    }
    Ok(roots)
}

/// Exact certificates for every pair 4 ≤ m < n ≤ n_max, ordered by
/// (m, n).
pub fn scan_disjointness(n_max: u32) -> Result<Vec<GcdCertificate>, ConjectureError> {
    if n_max < 4 {
        return Err(ConjectureError::BadScanBound(n_max));
    }
    let mut certs = Vec::new();
    for m in 4..n_max {
        for n in (m + 1)..=n_max {
            certs.push(pair_disjointness(m, n)?);
        }
    }
    Ok(certs)
}

/// The order pairs settled by elementary tangent-addition arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairFamily {
    /// (n, n+1)
    NextOrder,
    /// (n, n+2)
    SkipOrder,
    /// (n, 2n)
    Double,
    /// (n, 3n)
    Triple,
    /// (n, 2n+1)
    DoublePlusOne,
    /// (n, 2n−1)
    DoubleMinusOne,
    /// (n, 3n+1)
    TriplePlusOne,
    /// (n, 3n−1)
    TripleMinusOne,
}

impl PairFamily {
    pub const ALL: [PairFamily; 8] = [
        PairFamily::NextOrder,
        PairFamily::SkipOrder,
        PairFamily::Double,
        PairFamily::Triple,
        PairFamily::DoublePlusOne,
        PairFamily::DoubleMinusOne,
        PairFamily::TriplePlusOne,
        PairFamily::TripleMinusOne,
    ];

    pub fn partner(self, n: u32) -> u32 {
        match self {
            PairFamily::NextOrder => n + 1,
            PairFamily::SkipOrder => n + 2,
            PairFamily::Double => 2 * n,
            PairFamily::Triple => 3 * n,
            PairFamily::DoublePlusOne => 2 * n + 1,
            PairFamily::DoubleMinusOne => 2 * n - 1,
            PairFamily::TriplePlusOne => 3 * n + 1,
            PairFamily::TripleMinusOne => 3 * n - 1,
        }
    }
}

/// Minimum distance between the root sets of order n and its family
/// partner; +∞ when either set is empty. Strict positivity corroborates
/// the elementary no-common-solution results.
pub fn small_k_numeric_check(n: u32, family: PairFamily) -> Result<f64, ConjectureError> {
    let partner = family.partner(n);
    if n < 4 || partner < 4 {
        return Ok(f64::INFINITY);
    }
    let bn = trigroots::solve_bn(n)?;
    let bp = trigroots::solve_bn(partner)?;
    let mut min = f64::INFINITY;
    for a in &bn {
        for b in &bp {
            min = min.min((a.value - b.value).abs());
        }
    }
    Ok(min)
}

/// The two angles excluded by exact residue-class analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialAngle {
    QuarterPi,
    ThirdPi,
}

impl SpecialAngle {
    pub fn delta(self) -> f64 {
        match self {
            SpecialAngle::QuarterPi => PI / 4.0,
            SpecialAngle::ThirdPi => PI / 3.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpecialAngle::QuarterPi => "pi/4",
            SpecialAngle::ThirdPi => "pi/3",
        }
    }

    /// Integer sign of sin(m·δ) over the residue class of m; the shared
    /// irrational magnitude factors out because m = n−1 and m = n+1 have
    /// the same parity.
    fn numerator_sign(self, m: u32) -> i64 {
        match self {
            SpecialAngle::QuarterPi => match m % 8 {
                0 | 4 => 0,
                1..=3 => 1,
                _ => -1,
            },
            SpecialAngle::ThirdPi => match m % 6 {
                0 | 3 => 0,
                1 | 2 => 1,
                _ => -1,
            },
        }
    }
}

/// Numeric exclusion margin: the minimum of |sin-quotient residual| over
/// n ≤ n_max. Strictly positive for both special angles.
pub fn special_angle_exclusion(angle: SpecialAngle, n_max: u32) -> f64 {
    let delta = angle.delta();
    (2..=n_max.max(2))
        .map(|n| trigroots::sin_eq_residual(n, delta).abs())
        .fold(f64::INFINITY, f64::min)
}

/// Exact residue-class exclusion: for every n ≤ n_max the two numerators
/// of the sine-quotient equation at this angle, reduced to integer signs
/// against the common irrational magnitude, satisfy
/// `t(n−1)·(n+1) ≠ t(n+1)·(n−1)`. Returns the first violating n, if any.
pub fn special_angle_exact_exclusion(angle: SpecialAngle, n_max: u32) -> Option<u32> {
    for n in 2..=n_max.max(2) {
        let tm = angle.numerator_sign(n - 1);
        let tp = angle.numerator_sign(n + 1);
        if tm * i64::from(n + 1) == tp * i64::from(n - 1) {
            return Some(n);
        }
    }
    None
}

/// Continued-fraction convergents of a floating-point value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergentReport {
    pub value: f64,
    /// (p, q) pairs with strictly increasing q.
    pub convergents: Vec<(i64, i64)>,
    /// min over convergents of q²·|value − p/q|; small values flag good
    /// rational approximations.
    pub min_quality: f64,
    /// Expansion stopped at the denominator validity bound.
    pub truncated: bool,
    /// Set when the expansion terminated on an exact rational within
    /// double precision.
    pub exact_rational: Option<(i64, i64)>,
}

/// Continued-fraction expansion of `value` to at most `depth`
/// convergents, stopping at the precision validity bound.
///
/// Evidence only: beyond the denominator bound no claim is made.
pub fn continued_fraction(value: f64, depth: usize) -> ConvergentReport {
    let mut convergents = Vec::new();
    let mut p_prev = (0i64, 1i64); // (p_{-2}, q_{-2})
    let mut p_curr = (1i64, 0i64); // (p_{-1}, q_{-1})
    let mut x = value;
    let mut exact_rational = None;
    let mut truncated = false;
    let mut min_quality = f64::INFINITY;
    for _ in 0..depth {
        let a = x.floor();
        let p = a as i64 * p_curr.0 + p_prev.0;
        let q = a as i64 * p_curr.1 + p_prev.1;
        if q > CF_DENOMINATOR_BOUND {
            truncated = true;
            break;
        }
        p_prev = p_curr;
        p_curr = (p, q);
        convergents.push((p, q));
        if q > 0 {
            let quality = (q as f64) * (q as f64) * (value - p as f64 / q as f64).abs();
            min_quality = min_quality.min(quality);
        }
        let frac = x - a;
        if frac < 1e-12 {
            exact_rational = Some((p, q));
            break;
        }
        x = 1.0 / frac;
    }
    ConvergentReport {
        value,
        convergents,
        min_quality,
        truncated,
        exact_rational,
    }
}

/// Convergents of ξ/π for the k-th certified root of order n (1-based).
pub fn irrationality_evidence(
    n: u32,
    k: u32,
    depth: usize,
) -> Result<ConvergentReport, ConjectureError> {
    let roots = trigroots::solve_bn(n)?;
    let root = roots
        .iter()
        .find(|r| r.k == k)
        .ok_or(ConjectureError::NoSuchRoot { n, k })?;
    Ok(continued_fraction(root.value / PI, depth))
}

/// Table classes under the conditional classification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum TableClass {
    Circle,
    /// Caustic only at π/2.
    ConstantWidth {
        width: f64,
    },
    /// Conformally a single-harmonic deformation: order, amplitude after
    /// normalizing the mean radius to one, and its caustic angles.
    OmegaEquivalent {
        n: u32,
        tau: f64,
        deltas: Vec<f64>,
    },
    NoConstantAngleCaustic,
}

/// Classification of a table, valid conditionally on the disjointness
/// certificates up to the stated bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub n_max: u32,
    pub class: TableClass,
}

/// Classify a table per the conditional structure theorems.
///
/// Conformal equivalence is decided at the level the theorems use it:
/// the mean radius is normalized to one and the harmonic phase rotated
/// to a pure sine, leaving only (n, τ).
pub fn conditional_classification(
    curve: &FourierCurve,
    n_max: u32,
) -> Result<ClassificationReport, ConjectureError> {
    let class = if curve.is_circular() {
        TableClass::Circle
    } else if curve.harmonics().len() == 1 {
        let h = curve.harmonics()[0];
        let tau = h.amplitude() / curve.c0();
        if h.k > 3 {
            TableClass::OmegaEquivalent {
                n: h.k,
                tau,
                deltas: trigroots::build_an(h.k)?.members,
            }
        } else if h.k % 2 == 1 {
            TableClass::ConstantWidth {
                width: 2.0 * curve.c0(),
            }
        } else {
            TableClass::NoConstantAngleCaustic
        }
    } else if curve.harmonics().iter().all(|h| h.k % 2 == 1) {
        TableClass::ConstantWidth {
            width: 2.0 * curve.c0(),
        }
    } else {
        TableClass::NoConstantAngleCaustic
    };
    Ok(ClassificationReport { n_max, class })
}

impl IntPolynomial {
    /// Divide every coefficient by a nonzero integer, exactly.
    fn exact_div_scalar(&self, divisor: &num_bigint::BigInt) -> Option<IntPolynomial> {
        use num_integer::Integer;
        use num_traits::Zero;
        if divisor.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(IntPolynomial::new(coeffs))
    }
}
