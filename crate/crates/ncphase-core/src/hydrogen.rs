//! Hydrogen bound states: unperturbed energies, exact radial moments
//! `⟨r^s⟩` and an independent quadrature oracle over the radial
//! wavefunctions.
//!
//! Everything is in Hartree atomic units (energies in Hartree, lengths in
//! Bohr radii). Closed forms and the Kramers–Pasternack recursion are
//! exact rational arithmetic; floating point only enters the quadrature
//! oracle.

use alloc::vec::Vec;
use core::fmt;

use libm::{exp, sqrt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::gauss::{gauss_legendre, integrate_adaptive, QuadratureError};

/// Hydrogen state label `(n, l, m)` with the usual validity constraints
/// `0 ≤ l ≤ n−1`, `−l ≤ m ≤ l`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self, HydrogenError> {
        if n < 1 || l >= n || m.unsigned_abs() > l {
            return Err(HydrogenError::InvalidQuantumNumbers { n, l, m });
        }
        Ok(QuantumNumbers { n, l, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, l={}, m={})", self.n, self.l, self.m)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HydrogenError {
    InvalidQuantumNumbers {
        n: u32,
        l: u32,
        m: i32,
    },
    /// `⟨r^s⟩` does not exist for this `(s, l)` (integrand not integrable
    /// at the origin).
    DivergentMoment {
        s: i32,
        l: u32,
    },
    /// The quadrature oracle failed to converge.
    NoConvergence,
}

impl fmt::Display for HydrogenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HydrogenError::InvalidQuantumNumbers { n, l, m } => {
                write!(f, "invalid quantum numbers (n={n}, l={l}, m={m}): need n ≥ 1, 0 ≤ l ≤ n−1, |m| ≤ l")
            }
            HydrogenError::DivergentMoment { s, l } => {
                write!(f, "radial moment ⟨r^{s}⟩ diverges for l = {l}")
            }
            HydrogenError::NoConvergence => write!(f, "quadrature did not converge"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HydrogenError {}

impl From<QuadratureError> for HydrogenError {
    fn from(_: QuadratureError) -> Self {
        HydrogenError::NoConvergence
    }
}

fn br(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn br_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// Unperturbed level `E_n = −1/(2n²)` Hartree, exact.
pub fn energy0_exact(n: u32) -> Result<BigRational, HydrogenError> {
    if n < 1 {
        return Err(HydrogenError::InvalidQuantumNumbers { n, l: 0, m: 0 });
    }
    Ok(br_ratio(-1, 2 * (n as i64) * (n as i64)))
}

/// Unperturbed level `E_n = −1/(2n²)` Hartree.
pub fn energy0(n: u32) -> Result<f64, HydrogenError> {
    energy0_exact(n).map(|r| r.to_f64().unwrap())
}

/// `⟨r^s⟩` exists iff the radial integrand `r^{s + 2l + 2}` is integrable
/// at the origin.
pub fn moment_defined(s: i32, l: u32) -> bool {
    s + 2 * l as i32 + 2 >= 0
}

/// Coefficients `(A, B, C)` of the Kramers–Pasternack relation
/// `A⟨r^s⟩ + B⟨r^{s−1}⟩ + C⟨r^{s−2}⟩ = 0` at index `s`:
/// `A = (s+1)/n²`, `B = −(2s+1)`, `C = (s/4)((2l+1)² − s²)`.
fn kramers_coefficients(n: u32, l: u32, s: i32) -> (BigRational, BigRational, BigRational) {
    let n = n as i64;
    let l = l as i64;
    let s = s as i64;
    let a = br_ratio(s + 1, n * n);
    let b = br(-(2 * s + 1));
    let c = br_ratio(s, 4) * br((2 * l + 1) * (2 * l + 1) - s * s);
    (a, b, c)
}

/// Residual of the Kramers–Pasternack relation at index `s`, evaluated with
/// the closed-form/recursive moments. Exactly zero wherever all three
/// moments exist.
pub fn kramers_residual(q: &QuantumNumbers, s: i32) -> Result<BigRational, HydrogenError> {
    let (a, b, c) = kramers_coefficients(q.n, q.l, s);
    let m0 = radial_moment(q, s)?;
    let m1 = radial_moment(q, s - 1)?;
    let m2 = radial_moment(q, s - 2)?;
    Ok(a * m0 + b * m1 + c * m2)
}

fn closed_form_moment(n: u32, l: u32, s: i32) -> Option<BigRational> {
    let ni = n as i64;
    let li = l as i64;
    let ll1 = li * (li + 1);
    match s {
        0 => Some(br(1)),
        1 => Some(br_ratio(3 * ni * ni - ll1, 2)),
        2 => Some(br_ratio(ni * ni, 2) * br(5 * ni * ni + 1 - 3 * ll1)),
        -1 => Some(br_ratio(1, ni * ni)),
        -2 => Some(br_ratio(2, ni * ni * ni * (2 * li + 1))),
        -3 if l >= 1 => Some(br_ratio(2, ni * ni * ni * ll1 * (2 * li + 1))),
        _ => None,
    }
}

/// Exact radial moment `⟨r^s⟩` in units of `a_B^s`. Closed forms for
/// `s ∈ {−3, …, 2}`; `s > 2` by upward Kramers–Pasternack recursion from
/// `⟨r⁰⟩ = 1`, `⟨r^{−1}⟩ = 1/n²`; `s < −3` by downward recursion from
/// `⟨r^{−2}⟩`, `⟨r^{−3}⟩`. Independent of `m` by construction.
pub fn radial_moment(q: &QuantumNumbers, s: i32) -> Result<BigRational, HydrogenError> {
    if !moment_defined(s, q.l) {
        return Err(HydrogenError::DivergentMoment { s, l: q.l });
    }
    if let Some(v) = closed_form_moment(q.n, q.l, s) {
        return Ok(v);
    }
    if s > 2 {
        Ok(upward_recursion(q.n, q.l, s))
    } else {
        Ok(downward_recursion(q.n, q.l, s))
    }
}

/// The recursion-only path, used to cross-check the closed forms: seeds
/// `⟨r⁰⟩`, `⟨r^{−1}⟩`, `⟨r^{−2}⟩`, everything else recursive (including
/// `s = 1, 2` and `s = −3`, which `radial_moment` serves in closed form).
pub fn radial_moment_via_recursion(
    q: &QuantumNumbers,
    s: i32,
) -> Result<BigRational, HydrogenError> {
    if !moment_defined(s, q.l) {
        return Err(HydrogenError::DivergentMoment { s, l: q.l });
    }
    match s {
        0 => Ok(br(1)),
        -1 => Ok(br_ratio(1, (q.n as i64) * (q.n as i64))),
        -2 => Ok(closed_form_moment(q.n, q.l, -2).unwrap()),
        s if s > 0 => Ok(upward_recursion(q.n, q.l, s)),
        s => Ok(downward_recursion(q.n, q.l, s)),
    }
}

/// `⟨r^s⟩` for `s ≥ 1` from the seeds `⟨r^{−1}⟩`, `⟨r⁰⟩`.
fn upward_recursion(n: u32, l: u32, s: i32) -> BigRational {
    let mut prev = br_ratio(1, (n as i64) * (n as i64)); // ⟨r^{k−2}⟩, k = 1
    let mut cur = br(1); // ⟨r^{k−1}⟩
    for k in 1..=s {
        let (a, b, c) = kramers_coefficients(n, l, k);
        let next = -(b * &cur + c * &prev) / a;
        prev = cur;
        cur = next;
    }
    cur
}

/// `⟨r^s⟩` for `s ≤ −3` from the seeds `⟨r^{−2}⟩`, `⟨r^{−1}⟩`, applying the
/// relation at index `t + 2` to step down to `⟨r^t⟩`. The divisor `C`
/// vanishes only at the divergence boundary, which the caller has already
/// excluded.
fn downward_recursion(n: u32, l: u32, s: i32) -> BigRational {
    let mut hi = br_ratio(1, (n as i64) * (n as i64)); // ⟨r^{t+2}⟩, t = −3
    let mut mid = closed_form_moment(n, l, -2).unwrap(); // ⟨r^{t+1}⟩
    let mut cur = BigRational::zero();
    for t in (s..=-3).rev() {
        let (a, b, c) = kramers_coefficients(n, l, t + 2);
        debug_assert!(!c.is_zero());
        cur = -(a * &hi + b * &mid) / c;
        hi = core::mem::replace(&mut mid, cur.clone());
    }
    cur
}

/// Radial wavefunction `R_{nl}` with exact normalization and associated
/// Laguerre coefficients; the quadrature oracle evaluates it in floating
/// point.
#[derive(Clone, Debug)]
pub struct RadialState {
    n: u32,
    l: u32,
    /// `N²` in `R_{nl}(r) = N ρ^l L(ρ) e^{−ρ/2}`, `ρ = 2r/n`.
    norm_sq: BigRational,
    /// Coefficients of `L^{2l+1}_{n−l−1}` in ascending powers of `ρ`.
    laguerre: Vec<BigRational>,
    // float mirrors so eval() does no bignum work
    norm_f64: f64,
    laguerre_f64: Vec<f64>,
}

impl RadialState {
    pub fn new(q: &QuantumNumbers) -> Self {
        let (n, l) = (q.n, q.l);
        let k = n - l - 1;
        let alpha = 2 * l + 1;
        // L^α_k(x) = Σ_m (−1)^m C(k+α, k−m) x^m / m!
        let mut laguerre = Vec::with_capacity(k as usize + 1);
        for m in 0..=k {
            let binom = factorial(k + alpha) / (factorial(k - m) * factorial(alpha + m));
            let mut c = BigRational::new(binom, factorial(m));
            if m % 2 == 1 {
                c = -c;
            }
            laguerre.push(c);
        }
        // N² = (2/n)³ (n−l−1)! / (2n (n+l)!)
        let norm_sq = BigRational::new(
            BigInt::from(8) * factorial(n - l - 1),
            BigInt::from((n as i64).pow(4) * 2) * factorial(n + l),
        );
        let norm_f64 = sqrt(norm_sq.to_f64().unwrap());
        let laguerre_f64 = laguerre.iter().map(|c| c.to_f64().unwrap()).collect();
        RadialState {
            n,
            l,
            norm_sq,
            laguerre,
            norm_f64,
            laguerre_f64,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Exact squared normalization constant.
    pub fn norm_sq(&self) -> &BigRational {
        &self.norm_sq
    }

    /// Exact associated Laguerre coefficients in ascending powers of `ρ`.
    pub fn laguerre_coefficients(&self) -> &[BigRational] {
        &self.laguerre
    }

    /// `R_{nl}(r)` at `r` in Bohr radii.
    pub fn eval(&self, r: f64) -> f64 {
        let rho = 2.0 * r / self.n as f64;
        let mut poly = 0.0;
        for &c in self.laguerre_f64.iter().rev() {
            poly = poly * rho + c;
        }
        let mut rho_l = 1.0;
        for _ in 0..self.l {
            rho_l *= rho;
        }
        self.norm_f64 * rho_l * poly * exp(-0.5 * rho)
    }
}

/// Default truncation radius of the oracle integral: the integrand decays
/// like `e^{−2r/n}` times a polynomial, so the tail beyond `2n(n + 40)` is
/// far below every tolerance used (n ≤ 10).
pub fn default_r_max(n: u32) -> f64 {
    2.0 * n as f64 * (n as f64 + 40.0)
}

/// Independent oracle for [`radial_moment`]: `∫₀^∞ R_{nl}² r^{s+2} dr` by
/// adaptive Gauss–Legendre quadrature on `[0, r_max]`.
pub fn quadrature_moment(q: &QuantumNumbers, s: i32, tol: f64) -> Result<f64, HydrogenError> {
    assert!(tol > 0.0, "tolerance must be positive");
    if !moment_defined(s, q.l) {
        return Err(HydrogenError::DivergentMoment { s, l: q.l });
    }
    let state = RadialState::new(q);
    let r_max = default_r_max(q.n);
    let f = move |r: f64| {
        let w = state.eval(r);
        w * w * libm::pow(r, (s + 2) as f64)
    };
    let rule = gauss_legendre(20);
    // a fixed grid fixes the scale; the adaptive pass then meets the
    // relative tolerance, with a roundoff floor so subdivision stops once
    // differences are pure floating-point noise
    let rough = crate::gauss::integrate_fixed_grid(&rule, &f, 0.0, r_max, 64);
    let scale = if rough.abs() > 1e-300 {
        rough.abs()
    } else {
        1.0
    };
    Ok(integrate_adaptive(
        &rule,
        &f,
        0.0,
        r_max,
        tol * scale,
        1e-15 * scale,
        48,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32, l: u32, m: i32) -> QuantumNumbers {
        QuantumNumbers::new(n, l, m).unwrap()
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(1, 0, 0).is_ok());
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
        assert!(QuantumNumbers::new(2, 2, 0).is_err());
        assert!(QuantumNumbers::new(2, 1, 2).is_err());
        assert!(QuantumNumbers::new(2, 1, -1).is_ok());
    }

    #[test]
    fn ground_state_energies() {
        assert_eq!(energy0(1).unwrap(), -0.5);
        assert_eq!(energy0(2).unwrap(), -0.125);
        assert_eq!(energy0(2).unwrap() - energy0(1).unwrap(), 0.375);
        assert!(energy0(0).is_err());
    }

    #[test]
    fn r_squared_closed_form() {
        // ⟨r²⟩ = (n²/2)(5n² + 1 − 3l(l+1)); ground state: 3
        assert_eq!(radial_moment(&q(1, 0, 0), 2).unwrap(), br(3));
        assert_eq!(radial_moment(&q(2, 0, 0), 2).unwrap(), br(42));
        assert_eq!(radial_moment(&q(2, 1, 0), 2).unwrap(), br(30));
    }

    #[test]
    fn normalization_moment_is_one() {
        for (n, l) in [(1, 0), (3, 1), (5, 4)] {
            assert_eq!(radial_moment(&q(n, l, 0), 0).unwrap(), br(1));
        }
    }

    #[test]
    fn inverse_cube_moment() {
        // ⟨r^{−3}⟩ = 2/(n³ l(l+1)(2l+1)); (2,1): 1/24
        assert_eq!(radial_moment(&q(2, 1, 0), -3).unwrap(), br_ratio(1, 24));
    }

    #[test]
    fn divergent_moments_rejected() {
        assert_eq!(
            radial_moment(&q(1, 0, 0), -3).unwrap_err(),
            HydrogenError::DivergentMoment { s: -3, l: 0 }
        );
        assert_eq!(
            radial_moment(&q(3, 1, 0), -5).unwrap_err(),
            HydrogenError::DivergentMoment { s: -5, l: 1 }
        );
        assert!(quadrature_moment(&q(2, 0, 0), -3, 1e-8).is_err());
    }

    #[test]
    fn moments_ignore_m() {
        assert_eq!(
            radial_moment(&q(3, 2, -2), 4).unwrap(),
            radial_moment(&q(3, 2, 1), 4).unwrap()
        );
    }

    #[test]
    fn recursion_matches_closed_forms() {
        for (n, l) in [(1u32, 0u32), (2, 0), (2, 1), (5, 3), (7, 2)] {
            let qn = q(n, l, 0);
            for s in -3..=2 {
                if !moment_defined(s, l) {
                    continue;
                }
                assert_eq!(
                    radial_moment_via_recursion(&qn, s).unwrap(),
                    radial_moment(&qn, s).unwrap(),
                    "n={n} l={l} s={s}"
                );
            }
        }
    }

    #[test]
    fn deep_negative_moments_via_downward_recursion() {
        // ⟨r^{−4}⟩ for (2,1) = 1/24 (known closed form value)
        assert_eq!(radial_moment(&q(2, 1, 0), -4).unwrap(), br_ratio(1, 24));
    }

    #[test]
    fn kramers_residual_is_exactly_zero() {
        for (n, l) in [(2u32, 1u32), (4, 2), (6, 0), (10, 9)] {
            let qn = q(n, l, 0);
            for s in 1..=6 {
                assert!(
                    kramers_residual(&qn, s).unwrap().is_zero(),
                    "nonzero residual at n={n} l={l} s={s}"
                );
            }
        }
    }

    #[test]
    fn quadrature_normalization() {
        for (n, l) in [(1u32, 0u32), (2, 1), (5, 3), (10, 0)] {
            let v = quadrature_moment(&q(n, l, 0), 0, 1e-13).unwrap();
            assert!((v - 1.0).abs() < 1e-12, "n={n} l={l}: {v}");
        }
    }

    #[test]
    fn quadrature_agrees_with_closed_forms() {
        let v = quadrature_moment(&q(1, 0, 0), 2, 1e-10).unwrap();
        assert!((v - 3.0).abs() < 3e-10);
        // Kramers value ⟨r⟩ = (3n² − l(l+1))/2 = 31.5 at (5,3)
        let v = quadrature_moment(&q(5, 3, 0), 1, 1e-10).unwrap();
        assert!((v - 31.5).abs() / 31.5 < 1e-9);
        let v = quadrature_moment(&q(2, 1, 0), -3, 1e-10).unwrap();
        assert!((v - 1.0 / 24.0).abs() * 24.0 < 1e-9);
    }
}
