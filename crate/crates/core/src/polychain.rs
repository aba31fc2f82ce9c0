//! The exact integer polynomial chain behind the angle equations.
//!
//! `tan nx` is a rational function of `tan x`: `tan nx = P_n(z)/Q_n(z)`
//! with `z = tan x`. The pair satisfies the recurrence
//! `P_{n+1} = P_n + z Q_n`, `Q_{n+1} = Q_n − z P_n` from `P_1 = z`,
//! `Q_1 = 1`. The combination `R_n = P_n − n z Q_n` vanishes exactly at
//! `z = tan x` for solutions of `tan nx = n tan x`, and the Möbius map
//! `x = −(z−i)/(z+i)` carries its nonzero roots onto the unit circle,
//! where they become the roots of
//!
//! ```text
//! S_n(x) = (n−1)(x^{n+1} − 1) − (n+1)(x^n − x),
//! ```
//!
//! an anti-palindromic polynomial with a triple root at 1. All
//! coefficients are exact arbitrary-precision integers; floating point
//! enters only at evaluation and root-refinement time.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::trigroots::{self, TrigrootsError};

/// Residual bound on claimed circle roots; exceeding it signals an
/// inconsistency between the trigonometric and polynomial routes.
pub const CIRCLE_ROOT_RESIDUAL_BOUND: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum PolychainError {
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("circle root at phi = {phi} for n = {n} has residual {residual}")]
    RootResidual { n: u32, phi: f64, residual: f64 },
    #[error(transparent)]
    Trigroots(#[from] TrigrootsError),
}

/// An integer-coefficient polynomial, coefficients ascending by degree.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial has
/// an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl Serialize for IntPolynomial {
    /// Coefficients as decimal strings, ascending by degree; exact at
    /// any size.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact evaluation over the integers.
    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating-point evaluation at a complex point (Horner).
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.eval_complex(Complex64::new(x, 0.0)).re
    }

    /// Exact sign of the value at a double-precision point. Every f64 is
    /// a dyadic rational `m·2^e`, so the sign is computed in integer
    /// arithmetic with no rounding at all.
    pub fn exact_sign_at(&self, x: f64) -> i32 {
        let Some(deg) = self.degree() else { return 0 };
        let (mant, exp) = decompose_f64(x);
        let m = BigInt::from(mant);
        let value = if exp >= 0 {
            self.eval_bigint(&(m << exp as usize))
        } else {
            // scale by 2^{k·deg}: Horner with a growing power of two
            let k = (-exp) as usize;
            let mut acc = self.coeffs[deg].clone();
            for j in 1..=deg {
                acc = acc * &m + (self.coeffs[deg - j].clone() << (k * j));
            }
            acc
        };
        match value.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Exact division; fails unless the remainder is identically zero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolychainError> {
        if divisor.is_zero() {
            return Err(PolychainError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_deg = divisor.degree().unwrap();
        let d_lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d_deg + 1 {
            return Err(PolychainError::NonzeroRemainder);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (d_deg..rem.len()).rev() {
            let lead = std::mem::replace(&mut rem[i], BigInt::zero());
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(d_lead);
            if !r.is_zero() {
                return Err(PolychainError::NonzeroRemainder);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate().take(d_deg) {
                let idx = i - d_deg + j;
                rem[idx] -= &q * dc;
            }
            quot[i - d_deg] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolychainError::NonzeroRemainder);
        }
        Ok(Self::new(quot))
    }

    /// Pseudo-division: returns (q, r) with
    /// `lc(d)^{deg a − deg d + 1} · a = q·d + r` and `deg r < deg d`.
    pub fn pseudo_div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("pseudo-division by zero");
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let a_deg = match self.degree() {
            Some(d) if d >= d_deg => d,
            _ => {
                return (Self::zero(), self.clone());
            }
        };
        let mut steps = a_deg - d_deg + 1;
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let t = Self::new({
                let mut c = vec![BigInt::zero(); r_deg - d_deg + 1];
                c[r_deg - d_deg] = rem.leading().unwrap().clone();
                c
            });
            quot = quot.scale(&d_lead).add(&t);
            rem = rem.scale(&d_lead).sub(&t.mul(divisor));
            steps -= 1;
        }
        // pad the identity up to the full power of the leading coefficient
        for _ in 0..steps {
            quot = quot.scale(&d_lead);
            rem = rem.scale(&d_lead);
        }
        (quot, rem)
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content (zero stays zero).
    pub fn primitive_part(&self) -> Self {
        let content = self.content();
        if content.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Flip the overall sign if the leading coefficient is negative.
    pub fn normalize_sign(&self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// True iff `x^deg · p(1/x) = −p(x)`, i.e. the reversed coefficient
    /// vector equals the negated one.
    pub fn is_anti_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == -&self.coeffs[n - 1 - i])
    }

    /// True iff only odd-degree coefficients are present.
    pub fn is_odd_polynomial(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    /// True iff only even-degree coefficients are present.
    pub fn is_even_polynomial(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Coefficients in decimal, ascending, space-separated.
    pub fn coeff_line(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coeff_line())
    }
}

/// Export format: family tag, order, then ascending coefficients,
/// e.g. `S 4: -3 5 0 0 -5 3`.
pub fn export_line(tag: &str, n: u32, poly: &IntPolynomial) -> String {
    format!("{tag} {n}: {}", poly.coeff_line())
}

/// The tangent-multiple pair (P_n, Q_n) from the recurrence
/// `P_{n+1} = P_n + z Q_n`, `Q_{n+1} = Q_n − z P_n`, `P_1 = z`, `Q_1 = 1`.
///
/// P_n is odd, Q_n is even; their degrees are n or n−1 by parity.
pub fn pq_pair(n: u32) -> (IntPolynomial, IntPolynomial) {
    assert!(n >= 1, "pq_pair requires n >= 1");
    let z = IntPolynomial::from_i64(&[0, 1]);
    let mut p = z.clone();
    let mut q = IntPolynomial::constant(1);
    for _ in 1..n {
        let p_next = p.add(&z.mul(&q));
        let q_next = q.sub(&z.mul(&p));
        p = p_next;
        q = q_next;
    }
    (p, q)
}

fn i_pow(m: u32) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Closed-form evaluation of (P_n, Q_n) at a complex point, from
/// `−2P_n = i^{n+1}(z−i)^n + (−i)^{n+1}(z+i)^n` and
/// `2Q_n = i^n(z−i)^n + (−i)^n(z+i)^n`.
pub fn pq_closed_eval(n: u32, z: Complex64) -> (Complex64, Complex64) {
    assert!(n >= 1, "pq_closed_eval requires n >= 1");
    let i = Complex64::new(0.0, 1.0);
    let wm = (z - i).powu(n);
    let wp = (z + i).powu(n);
    // (−i)^m = i^{4 − m mod 4}
    let neg_i_pow = |m: u32| i_pow((4 - m % 4) % 4);
    let p = -(i_pow(n + 1) * wm + neg_i_pow(n + 1) * wp) / 2.0;
    let q = (i_pow(n) * wm + neg_i_pow(n) * wp) / 2.0;
    (p, q)
}

/// `R_n = P_n − n z Q_n`, the odd polynomial whose positive roots are the
/// tangents of the certified angles. Has a zero of order three at the
/// origin.
pub fn r_poly(n: u32) -> IntPolynomial {
    assert!(n >= 2, "r_poly requires n >= 2");
    let (p, q) = pq_pair(n);
    p.sub(&q.shift_up(1).scale(&BigInt::from(n)))
}

/// `S_n(x) = (n−1)(x^{n+1} − 1) − (n+1)(x^n − x)`.
pub fn s_poly(n: u32) -> IntPolynomial {
    assert!(n >= 2, "s_poly requires n >= 2");
    let nm = i64::from(n) - 1;
    let np = i64::from(n) + 1;
    let mut coeffs = vec![BigInt::zero(); n as usize + 2];
    coeffs[0] = BigInt::from(-nm);
    coeffs[1] = BigInt::from(np);
    coeffs[n as usize] += BigInt::from(-np);
    coeffs[n as usize + 1] += BigInt::from(nm);
    IntPolynomial::new(coeffs)
}

/// `S_n` with the forced roots removed: divided by (x−1)³, and by (x+1)
/// as well when n is odd. Exact integer division; a nonzero remainder is
/// a bug signal.
pub fn reduced_s_poly(n: u32) -> Result<IntPolynomial, PolychainError> {
    let cube = IntPolynomial::from_i64(&[-1, 3, -3, 1]);
    let mut reduced = s_poly(n).exact_div(&cube)?;
    if n % 2 == 1 {
        reduced = reduced.exact_div(&IntPolynomial::from_i64(&[1, 1]))?;
    }
    Ok(reduced)
}

/// The roots of `S_n` on the unit circle other than ±1, as angles
/// `x = e^{iφ}`, with per-root evaluation residuals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircleRootSet {
    pub n: u32,
    /// Sorted angles in (0, 2π) \ {π}; closed under φ → 2π − φ.
    pub phis: Vec<f64>,
    pub residuals: Vec<f64>,
    /// −1 is a simple root exactly when n is odd; reported separately
    /// from the strictly complex roots.
    pub includes_minus_one: bool,
}

/// Locate all complex roots of `S_n` on the unit circle.
///
/// Anti-palindromy pins |x| = 1, reducing root-finding to the real
/// equation `(n−1)sin((n+1)φ/2) = (n+1)sin((n−1)φ/2)` — the certified
/// angle chain at δ = φ/2. Residuals come from exact-coefficient Horner
/// evaluation at e^{iφ}.
pub fn s_roots_on_circle(n: u32) -> Result<CircleRootSet, PolychainError> {
    let s = s_poly(n);
    let bn = trigroots::solve_bn(n)?;
    let mut phis = Vec::with_capacity(2 * bn.len());
    for root in &bn {
        phis.push(2.0 * root.value);
    }
    for root in bn.iter().rev() {
        phis.push(2.0 * PI - 2.0 * root.value);
    }
    let mut residuals = Vec::with_capacity(phis.len());
    for &phi in &phis {
        let x = Complex64::new(phi.cos(), phi.sin());
        let residual = s.eval_complex(x).norm();
        if residual > CIRCLE_ROOT_RESIDUAL_BOUND {
            return Err(PolychainError::RootResidual { n, phi, residual });
        }
        residuals.push(residual);
    }
    Ok(CircleRootSet {
        n,
        phis,
        residuals,
        includes_minus_one: n % 2 == 1,
    })
}

/// The Möbius map `z ↦ −(z−i)/(z+i)` carrying the real line onto the
/// unit circle. Computed in the rationalized form
/// `((1−z²) + 2zi)/(1+z²)`, which keeps |x| = 1 to roundoff. Positive z
/// land in the upper half circle; 0 maps to 1 (the triple root) and
/// z → ±∞ tends to −1.
pub fn mobius_root_map(z: f64) -> Complex64 {
    let denom = 1.0 + z * z;
    if denom.is_infinite() {
        return Complex64::new(-1.0, 0.0);
    }
    Complex64::new((1.0 - z * z) / denom, 2.0 * z / denom)
}

/// Split a finite f64 into (mantissa, base-2 exponent) with
/// `x = mantissa · 2^exponent` exactly.
fn decompose_f64(x: f64) -> (i64, i32) {
    assert!(x.is_finite());
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1i64 } else { 1i64 };
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    if exp_bits == 0 {
        (sign * frac, -1074)
    } else {
        (sign * (frac + (1i64 << 52)), exp_bits - 1075)
    }
}
