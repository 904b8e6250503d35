//! First-order hydrogen energy corrections in the rotationally invariant
//! noncommutative phase space, the ns-level formula, the 1s–2s transition
//! shifts, the second-order vanishing check and the first-order-moment
//! vanishing check.
//!
//! All energies are in Hartree, with the hydrogen mass equal to the
//! electron mass (no reduced-mass correction). The generic corrections
//! are
//!
//! ```text
//! ΔE(η)_{n,l} = n² (5n² + 1 − 3l(l+1)) η̃² / 24
//! ΔE(θ)_{n,l} = −(θ̃²/n⁵) B(n, l)            (l ≥ 2)
//! ```
//!
//! with `B(n, l)` a four-term rational bracket whose pieces nearly cancel
//! for some `(n, l)`; it is evaluated in exact rational arithmetic and only
//! then scaled by the floating moment. The formula has no finite value for
//! `l = 0` (the ns levels take the dedicated [`delta_ns`] route, linear in
//! `θ̃`) or for `l = 1` (no finite result exists; hard error).

use core::fmt;

use libm::sqrt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::hydrogen::{self, QuantumNumbers};
use crate::oscillator::{GaussianOracle, NcMoments, NcParams, OscillatorParams};

const PI: f64 = core::f64::consts::PI;

/// The ns-level θ coefficient `1.72`, exact (`43/25`): a fixed numerical
/// constant of the ns-level formula, treated as exact so results are
/// deterministic.
pub const NS_THETA_CONSTANT_NUM: i64 = 43;
pub const NS_THETA_CONSTANT_DEN: i64 = 25;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorrectionError {
    InvalidQuantumNumbers {
        n: u32,
        l: u32,
    },
    /// The generic θ formula diverges: `l = 0` has the dedicated ns-level
    /// route; `l = 1` has no finite result at all.
    DivergentFormula {
        l: u32,
    },
    NonPositiveFrequency,
}

impl fmt::Display for CorrectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorrectionError::InvalidQuantumNumbers { n, l } => {
                write!(f, "invalid quantum numbers (n={n}, l={l}): need n ≥ 1 and l ≤ n−1")
            }
            CorrectionError::DivergentFormula { l } => write!(
                f,
                "theta correction formula diverges for l = {l}: use the ns-level route for l = 0; no finite result exists for l = 1"
            ),
            CorrectionError::NonPositiveFrequency => write!(f, "frequency must be positive"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CorrectionError {}

/// Which formula produced a [`CorrectionResult`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CorrectionRoute {
    #[cfg_attr(feature = "serde", serde(rename = "generic_l_ge_2"))]
    GenericLGe2,
    NsFormula,
}

/// Energy shift of one level, split into the θ and η parts.
#[derive(Clone, Copy, PartialEq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CorrectionResult {
    pub n: u32,
    pub l: u32,
    /// Hartree; `∝ θ̃²` on the generic route, `∝ θ̃` on the ns route.
    pub delta_theta: f64,
    /// Hartree; `∝ η̃²` on both routes.
    pub delta_eta: f64,
    /// `delta_theta + delta_eta`.
    pub total: f64,
    pub route: CorrectionRoute,
}

fn br(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn br_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn validate(n: u32, l: u32) -> Result<(), CorrectionError> {
    if n < 1 || l >= n {
        return Err(CorrectionError::InvalidQuantumNumbers { n, l });
    }
    Ok(())
}

/// `n² (5n² + 1 − 3l(l+1)) / 24`, the exact η coefficient; positive for all
/// valid `(n, l)` since `5n² + 1 − 3l(l+1) > 0` for `l ≤ n−1`.
pub fn eta_coefficient(n: u32, l: u32) -> BigRational {
    let ni = n as i64;
    let li = l as i64;
    br_ratio(ni * ni, 24) * br(5 * ni * ni + 1 - 3 * li * (li + 1))
}

/// The four-term bracket `B(n, l)` of the generic θ correction, exact;
/// defined for `l ≥ 2`.
pub fn theta_bracket(n: u32, l: u32) -> Result<BigRational, CorrectionError> {
    validate(n, l)?;
    if l < 2 {
        return Err(CorrectionError::DivergentFormula { l });
    }
    let ni = n as i64;
    let li = l as i64;
    let n2 = ni * ni;
    let ll1 = li * (li + 1);

    let t1 = br_ratio(1, 6 * ll1 * (2 * li + 1));
    let t2 = br(6 * n2 - 2 * ll1) / br(3 * ll1 * (2 * li + 1) * (2 * li + 3) * (2 * li - 1));
    let t3 = br(5 * n2 - 3 * ll1 + 1)
        / br(2 * (li + 2) * (2 * li + 1) * (2 * li + 3) * (li - 1) * (2 * li - 1));
    let t4 = br_ratio(5, 6) * br(5 * n2 - 3 * ll1 + 1)
        / br(ll1 * (li + 2) * (2 * li + 1) * (2 * li + 3) * (li - 1) * (2 * li - 1));

    Ok(t1 - t2 + t3 - t4)
}

/// `ΔE(η)_{n,l} = n² (5n² + 1 − 3l(l+1)) η̃² / 24` Hartree.
pub fn delta_eta(n: u32, l: u32, params: &NcParams) -> Result<f64, CorrectionError> {
    validate(n, l)?;
    Ok(eta_coefficient(n, l).to_f64().unwrap() * params.moments().eta_sq_tilde)
}

/// `ΔE(θ)_{n,l} = −(θ̃²/n⁵) B(n, l)` Hartree, `l ≥ 2` only.
pub fn delta_theta(n: u32, l: u32, params: &NcParams) -> Result<f64, CorrectionError> {
    let bracket = theta_bracket(n, l)?;
    let scale = bracket / br((n as i64).pow(5));
    // + 0.0 turns the negative zero of a vanishing moment into plain zero
    Ok(-scale.to_f64().unwrap() * params.moments().theta_sq_tilde + 0.0)
}

/// ns-level correction
/// `ΔE_ns = n²(5n²+1) η̃²/24 + 1.72·π θ̃/(8n³)` Hartree.
pub fn delta_ns(n: u32, params: &NcParams) -> Result<f64, CorrectionError> {
    validate(n, 0)?;
    let m = params.moments();
    Ok(delta_ns_eta_part(n, &m) + delta_ns_theta_part(n, &m))
}

fn delta_ns_eta_part(n: u32, m: &NcMoments) -> f64 {
    eta_coefficient(n, 0).to_f64().unwrap() * m.eta_sq_tilde
}

fn delta_ns_theta_part(n: u32, m: &NcMoments) -> f64 {
    let rational =
        br_ratio(NS_THETA_CONSTANT_NUM, NS_THETA_CONSTANT_DEN) / br(8 * (n as i64).pow(3));
    rational.to_f64().unwrap() * PI * m.theta_tilde
}

/// Level correction with route dispatch: `l = 0` takes the ns formula,
/// `l ≥ 2` the generic one, `l = 1` is a hard error.
pub fn correction(n: u32, l: u32, params: &NcParams) -> Result<CorrectionResult, CorrectionError> {
    validate(n, l)?;
    let m = params.moments();
    let (dt, de, route) = match l {
        0 => (
            delta_ns_theta_part(n, &m),
            delta_ns_eta_part(n, &m),
            CorrectionRoute::NsFormula,
        ),
        1 => return Err(CorrectionError::DivergentFormula { l }),
        _ => (
            delta_theta(n, l, params)?,
            delta_eta(n, l, params)?,
            CorrectionRoute::GenericLGe2,
        ),
    };
    Ok(CorrectionResult {
        n,
        l,
        delta_theta: dt,
        delta_eta: de,
        total: dt + de,
        route,
    })
}

/// 1s–2s transition shifts by both routes: the closed coefficients
/// (`Δθ = −3π θ̃/16`, `Δη = 13 η̃²/4`) and the difference
/// `ΔE_ns(2) − ΔE_ns(1)`. The η routes agree exactly; the θ routes differ
/// by ≈0.33% because `3/16` rounds `1.72·7/64`.
#[derive(Clone, Copy, PartialEq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TransitionShift {
    pub theta_closed: f64,
    pub theta_ns_route: f64,
    pub eta_closed: f64,
    pub eta_ns_route: f64,
}

impl TransitionShift {
    /// Relative gap between the two θ routes (0 when both vanish).
    pub fn theta_route_gap(&self) -> f64 {
        if self.theta_ns_route == 0.0 {
            return 0.0;
        }
        ((self.theta_closed - self.theta_ns_route) / self.theta_ns_route).abs()
    }
}

pub fn transition_shift_1s_2s(params: &NcParams) -> TransitionShift {
    let m = params.moments();
    let theta_closed = -3.0 * PI / 16.0 * m.theta_tilde + 0.0;
    let eta_closed = 13.0 / 4.0 * m.eta_sq_tilde;
    let theta_ns_route = delta_ns_theta_part(2, &m) - delta_ns_theta_part(1, &m);
    let eta_ns_route = delta_ns_eta_part(2, &m) - delta_ns_eta_part(1, &m);
    TransitionShift {
        theta_closed,
        theta_ns_route,
        eta_closed,
        eta_ns_route,
    }
}

/// `Σ_k Σ_{m'} |⟨l m'|L_k|l m⟩|²` from the ladder matrix elements; equals
/// `l(l+1)` for every `m`, which makes the second-order channel
/// `m`-independent.
pub fn angular_coupling_sum(l: u32, m: i32) -> f64 {
    let lf = l as f64;
    let mf = m as f64;
    let ll1 = lf * (lf + 1.0);
    // L_z: diagonal element m
    let mut total = mf * mf;
    // L_± → L_x, L_y: |⟨l,m±1|L_x|l,m⟩|² = |⟨l,m±1|L_y|l,m⟩|² = c_±²/4
    if m < l as i32 {
        let c = sqrt(ll1 - mf * (mf + 1.0));
        total += 2.0 * (c * c) / 4.0;
    }
    if m > -(l as i32) {
        let c = sqrt(ll1 - mf * (mf - 1.0));
        total += 2.0 * (c * c) / 4.0;
    }
    total
}

/// Second-order contribution of the `(η·L)/2M` term restricted to
/// intermediate states with one `b`-oscillator quantum and unchanged
/// hydrogen `(n, l)`: explicit sum over the excitation direction `k` and
/// the degenerate `m'`. Every matrix element is `ω`-independent (the
/// one-quantum momentum element squared is `ℏ²/(2 l_P²)` by the oscillator
/// length constraint), the denominator is exactly `−ℏω`, so the result is
/// `−η̃² l(l+1)/(12 ω)` — it vanishes like `1/ω`.
pub fn second_order_eta_l(
    n: u32,
    l: u32,
    omega: f64,
    params: &NcParams,
) -> Result<f64, CorrectionError> {
    validate(n, l)?;
    if !crate::oscillator::is_positive(omega) {
        return Err(CorrectionError::NonPositiveFrequency);
    }
    // p0²/l_P² in moment form (m-independent; evaluate the sum at m = 0)
    let p0_sq_over_lp_sq = params.moments().eta_sq_tilde * 2.0 / 3.0;
    let coupling = angular_coupling_sum(l, 0);
    // (p0/2)² · (1/(2 l_P²)) · Σ|L|² / (−ω)
    Ok(-(p0_sq_over_lp_sq / 8.0) * coupling / omega + 0.0)
}

/// The two first-order terms that vanish by parity of the oscillator ground
/// state: `⟨(η·L)⟩/2M` and `⟨(e²/2r³)(θ·L)⟩`, evaluated as oscillator first
/// moments times hydrogen factors on a probe state.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct VanishingReport {
    pub eta_l_term: f64,
    pub theta_l_term: f64,
}

impl VanishingReport {
    pub fn max_abs(&self) -> f64 {
        let a = self.eta_l_term.abs();
        let b = self.theta_l_term.abs();
        if a > b {
            a
        } else {
            b
        }
    }
}

/// Assemble the first-order terms from explicit oscillator first moments
/// `⟨a₃⟩`, `⟨p^b₃⟩` (atomic units). Split out so tests can mutate the
/// moments and watch the terms become nonzero.
pub fn first_order_terms(
    a3_mean: f64,
    pb3_mean: f64,
    params: &OscillatorParams,
    probe: &QuantumNumbers,
) -> Result<VanishingReport, CorrectionError> {
    if probe.l() < 1 {
        // ⟨r^{-3}⟩ diverges for l = 0 and ⟨L⟩ vanishes; the probe must
        // exercise both factors.
        return Err(CorrectionError::InvalidQuantumNumbers {
            n: probe.n(),
            l: probe.l(),
        });
    }
    let m = probe.m() as f64;
    let r_minus3 = hydrogen::radial_moment(probe, -3)
        .expect("finite for l >= 1")
        .to_f64()
        .unwrap();
    // ⟨(η·L)⟩/2M = (p0/2) ⟨p^b₃⟩ m
    let eta_l_term = 0.5 * params.p0() * pb3_mean * m;
    // ⟨(e²/2r³)(θ·L)⟩ = (1/2) ⟨r^{-3}⟩ l0 ⟨a₃⟩ m
    let theta_l_term = 0.5 * r_minus3 * params.l0() * a3_mean * m;
    Ok(VanishingReport {
        eta_l_term,
        theta_l_term,
    })
}

/// Evaluate the first-order vanishing check with the Gaussian oracle's
/// first moments on the default probe state `(2, 1, 1)`.
pub fn first_order_vanishing_check(
    params: &OscillatorParams,
) -> Result<VanishingReport, CorrectionError> {
    let oracle = GaussianOracle::new();
    let probe = QuantumNumbers::new(2, 1, 1).unwrap();
    let t3 = oracle.coordinate_first_moment(3).unwrap();
    let a3_mean = params.l_p() * t3;
    let pb3_mean = t3 / params.l_p();
    first_order_terms(a3_mean, pb3_mean, params, &probe)
}
