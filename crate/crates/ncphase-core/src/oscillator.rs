//! Ground-state statistics of the two auxiliary harmonic oscillators: the
//! expectation values of the noncommutativity tensors that feed every
//! correction formula.
//!
//! Dimensionless reporting throughout: `θ̃ = ℏ⟨θ⟩/a_B²`,
//! `θ̃² = ℏ²⟨θ²⟩/a_B⁴`, `η̃² = a_B⁴⟨η²⟩/ℏ²`. In Hartree atomic units these
//! reduce to `θ̃ = 2 l₀ l_P/√π`, `θ̃² = (3/2)(l₀ l_P)²`,
//! `η̃² = (3/2)(p₀/l_P)²` for the oscillator length `l_P = √(ℏ/m_osc ω)`.
//!
//! The closed forms are checked against a Gaussian quadrature oracle over
//! the exact ground-state density (see [`GaussianOracle`]).

use core::fmt;

use libm::sqrt;

use crate::gauss::{gauss_hermite, gauss_laguerre, QuadratureRule};

const PI: f64 = core::f64::consts::PI;

/// The Planck length in Bohr radii (CODATA 2018:
/// `l_P = 1.616255e-35 m`, `a_B = 5.29177210903e-11 m`).
pub const PLANCK_LENGTH_BOHR: f64 = 3.054279297557024e-25;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OscillatorError {
    /// `l0`/`p0` must be ≥ 0, `l_p` must be > 0.
    InvalidParams,
    /// Frequencies must be positive.
    NonPositiveFrequency,
    /// Axes must lie in `{1, 2, 3}`.
    InvalidAxis,
}

impl fmt::Display for OscillatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OscillatorError::InvalidParams => {
                write!(
                    f,
                    "invalid oscillator parameters: need l0 ≥ 0, p0 ≥ 0, l_p > 0"
                )
            }
            OscillatorError::NonPositiveFrequency => write!(f, "frequency must be positive"),
            OscillatorError::InvalidAxis => write!(f, "axis must be 1, 2 or 3"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OscillatorError {}

/// Raw noncommutativity inputs: the coupling constants `l0` (length) and
/// `p0` (momentum) and the oscillator length `l_p`, all in atomic units.
/// The oscillator mass is never independent: `m_osc ω = 1/l_p²`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct OscillatorParams {
    l0: f64,
    p0: f64,
    l_p: f64,
}

// false for NaN, unlike the negated comparison
pub(crate) fn is_positive(x: f64) -> bool {
    x > 0.0
}

pub(crate) fn is_non_negative(x: f64) -> bool {
    x >= 0.0
}

impl OscillatorParams {
    pub fn new(l0: f64, p0: f64, l_p: f64) -> Result<Self, OscillatorError> {
        if !is_non_negative(l0) || !is_non_negative(p0) || !is_positive(l_p) {
            return Err(OscillatorError::InvalidParams);
        }
        Ok(OscillatorParams { l0, p0, l_p })
    }

    /// Desk-scale parameters with the physical Planck-length default for
    /// `l_p`.
    pub fn with_planck_length(l0: f64, p0: f64) -> Result<Self, OscillatorError> {
        Self::new(l0, p0, PLANCK_LENGTH_BOHR)
    }

    pub fn l0(&self) -> f64 {
        self.l0
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn l_p(&self) -> f64 {
        self.l_p
    }

    /// Oscillator mass implied by `√(ℏ/m_osc ω) = l_p` at frequency `ω`.
    pub fn mass_at(&self, omega: f64) -> Result<f64, OscillatorError> {
        if !is_positive(omega) {
            return Err(OscillatorError::NonPositiveFrequency);
        }
        Ok(1.0 / (omega * self.l_p * self.l_p))
    }
}

/// Dimensionless noncommutativity moments.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NcMoments {
    pub theta_tilde: f64,
    pub theta_sq_tilde: f64,
    pub eta_sq_tilde: f64,
}

/// Noncommutativity inputs: either the raw oscillator parameters or the
/// dimensionless moments directly. Exactly one form is ever present.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum NcParams {
    Raw(OscillatorParams),
    Moments(NcMoments),
}

impl NcParams {
    /// Resolve to dimensionless moments (closed forms for the raw form).
    pub fn moments(&self) -> NcMoments {
        match self {
            NcParams::Raw(p) => NcMoments {
                theta_tilde: theta_mean(p),
                theta_sq_tilde: theta_sq_mean(p),
                eta_sq_tilde: eta_sq_mean(p),
            },
            NcParams::Moments(m) => *m,
        }
    }
}

/// `θ̃ = ℏ⟨θ⟩/a_B² = 2 l₀ l_P/√π` — the ground-state mean of
/// `θ = (l0/ℏ)|a|`.
pub fn theta_mean(p: &OscillatorParams) -> f64 {
    2.0 * p.l0 * p.l_p / sqrt(PI)
}

/// `θ̃² = ℏ²⟨θ²⟩/a_B⁴ = (3/2)(l₀ l_P)²`.
pub fn theta_sq_mean(p: &OscillatorParams) -> f64 {
    1.5 * (p.l0 * p.l_p) * (p.l0 * p.l_p)
}

/// `η̃² = a_B⁴⟨η²⟩/ℏ² = (3/2)(p₀/l_P)²`.
pub fn eta_sq_mean(p: &OscillatorParams) -> f64 {
    1.5 * (p.p0 / p.l_p) * (p.p0 / p.l_p)
}

/// `⟨η_i η_j⟩` in dimensionless form: `(η̃²/3) δ_ij` (isotropy of the
/// ground state).
pub fn eta_covariance(p: &OscillatorParams, i: u8, j: u8) -> Result<f64, OscillatorError> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(OscillatorError::InvalidAxis);
    }
    Ok(if i == j { eta_sq_mean(p) / 3.0 } else { 0.0 })
}

/// Ground-state energy of the auxiliary oscillator pair: `3ℏω`
/// (`3ℏω/2` each).
pub fn oscillator_ground_energy(omega: f64) -> Result<f64, OscillatorError> {
    if !is_positive(omega) {
        return Err(OscillatorError::NonPositiveFrequency);
    }
    Ok(3.0 * omega)
}

/// Gaussian quadrature oracle over the oscillator ground state
/// `|ψ₀(t)|² = e^{−t²}/π^{3/2}` (dimensionless variable `t = a/l_P`, and
/// `u = p l_P/ℏ` on the momentum side).
///
/// Polynomial integrands go through a full 3-D product Gauss–Hermite grid
/// (64 nodes per axis — exact to machine precision for the degrees that
/// occur). The one non-polynomial integrand, `|t|`, is reduced exactly over
/// angles and handled by Gauss–Laguerre in `s = r²`, where it is again a
/// polynomial; a product Hermite grid cannot reach comparable accuracy on
/// the `|t|` cusp.
pub struct GaussianOracle {
    hermite: QuadratureRule,
    laguerre: QuadratureRule,
}

impl Default for GaussianOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl GaussianOracle {
    pub const NODES_PER_AXIS: usize = 64;

    pub fn new() -> Self {
        GaussianOracle {
            hermite: gauss_hermite(Self::NODES_PER_AXIS),
            laguerre: gauss_laguerre(Self::NODES_PER_AXIS),
        }
    }

    /// `⟨f(t₁, t₂, t₃)⟩` over the unit 3-D Gaussian, product grid.
    pub fn product_mean<F: Fn(f64, f64, f64) -> f64>(&self, f: F) -> f64 {
        let norm = libm::pow(PI, -1.5);
        let mut total = 0.0;
        for (&x, &wx) in self.hermite.nodes.iter().zip(&self.hermite.weights) {
            for (&y, &wy) in self.hermite.nodes.iter().zip(&self.hermite.weights) {
                let wxy = wx * wy;
                let mut inner = 0.0;
                for (&z, &wz) in self.hermite.nodes.iter().zip(&self.hermite.weights) {
                    inner += wz * f(x, y, z);
                }
                total += wxy * inner;
            }
        }
        norm * total
    }

    /// `⟨|t|⟩` over the unit 3-D Gaussian:
    /// `(4/√π)∫₀^∞ r³ e^{−r²} dr = (2/√π)∫₀^∞ s e^{−s} ds`.
    pub fn abs_mean(&self) -> f64 {
        2.0 / sqrt(PI) * self.laguerre.sum(|s| s)
    }

    /// Oracle value of [`theta_mean`]: `l₀ l_P ⟨|t|⟩`.
    pub fn theta_mean(&self, p: &OscillatorParams) -> f64 {
        p.l0 * p.l_p * self.abs_mean()
    }

    /// Oracle value of [`theta_sq_mean`]: `(l₀ l_P)² ⟨t²⟩`.
    pub fn theta_sq_mean(&self, p: &OscillatorParams) -> f64 {
        (p.l0 * p.l_p) * (p.l0 * p.l_p) * self.product_mean(|x, y, z| x * x + y * y + z * z)
    }

    /// Oracle value of [`eta_sq_mean`]: `(p₀/l_P)² ⟨u²⟩` on the momentum
    /// side.
    pub fn eta_sq_mean(&self, p: &OscillatorParams) -> f64 {
        (p.p0 / p.l_p) * (p.p0 / p.l_p) * self.product_mean(|x, y, z| x * x + y * y + z * z)
    }

    /// `⟨t_i⟩` — vanishes by parity; the oracle value for the first-moment
    /// checks.
    pub fn coordinate_first_moment(&self, axis: u8) -> Result<f64, OscillatorError> {
        if !(1..=3).contains(&axis) {
            return Err(OscillatorError::InvalidAxis);
        }
        Ok(self.product_mean(|x, y, z| match axis {
            1 => x,
            2 => y,
            _ => z,
        }))
    }

    /// `⟨t_i t_j⟩` — `δ_ij/2` for the unit Gaussian.
    pub fn coordinate_covariance(&self, i: u8, j: u8) -> Result<f64, OscillatorError> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
            return Err(OscillatorError::InvalidAxis);
        }
        let pick = |axis: u8, x: f64, y: f64, z: f64| match axis {
            1 => x,
            2 => y,
            _ => z,
        };
        Ok(self.product_mean(|x, y, z| pick(i, x, y, z) * pick(j, x, y, z)))
    }

    /// Oracle value of [`eta_covariance`]: `(p₀/l_P)² ⟨u_i u_j⟩`.
    pub fn eta_covariance(
        &self,
        p: &OscillatorParams,
        i: u8,
        j: u8,
    ) -> Result<f64, OscillatorError> {
        Ok((p.p0 / p.l_p) * (p.p0 / p.l_p) * self.coordinate_covariance(i, j)?)
    }
}
