//! Gauss quadrature rules: Legendre (finite intervals), Hermite (weight
//! `e^{-x²}` on ℝ) and Laguerre (weight `e^{-x}` on `[0, ∞)`).
//!
//! Nodes are computed by Newton iteration on the three-term recurrences,
//! with the usual asymptotic initial guesses. Hermite uses the orthonormal
//! recurrence so intermediate values stay bounded at high order. All float
//! math goes through `libm`, which keeps results identical across
//! platforms.

use alloc::vec::Vec;

use libm::{cos, fabs, pow, sqrt};

const PI: f64 = core::f64::consts::PI;
const NEWTON_EPS: f64 = 3e-15;
const NEWTON_MAX_ITER: usize = 100;

/// Nodes and weights of a quadrature rule.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// `Σ w_i f(x_i)` over the rule's native domain and weight.
    pub fn sum<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Integrate `f` over `[a, b]` (Legendre rules only: native domain
    /// `[-1, 1]`, unit weight).
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self.sum(|t| f(mid + half * t))
    }
}

/// Gauss–Legendre rule of order `n` on `[-1, 1]`, exact for polynomials of
/// degree `2n − 1`.
pub fn gauss_legendre(n: usize) -> QuadratureRule {
    assert!(n >= 2);
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            // Legendre recurrence: (k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1}
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for k in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * k + 1) as f64 * z * p2 - k as f64 * p3) / (k + 1) as f64;
            }
            dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if fabs(dz) < NEWTON_EPS {
                break;
            }
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule { nodes, weights }
}

/// Gauss–Hermite rule of order `n` for `∫ f(x) e^{-x²} dx`, exact for
/// polynomials of degree `2n − 1`.
pub fn gauss_hermite(n: usize) -> QuadratureRule {
    assert!(n >= 2);
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    let mut z = 0.0;
    for i in 0..m {
        // asymptotic initial guesses, largest root first
        z = match i {
            0 => sqrt((2 * n + 1) as f64) - 1.85575 * pow((2 * n + 1) as f64, -1.0 / 6.0),
            1 => z - 1.14 * pow(n as f64, 0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut dp = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            // orthonormal recurrence: h_{k+1} = x√(2/(k+1)) h_k − √(k/(k+1)) h_{k−1}
            let mut p1 = pow(PI, -0.25);
            let mut p2 = 0.0;
            for k in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = z * sqrt(2.0 / (k + 1) as f64) * p2 - sqrt(k as f64 / (k + 1) as f64) * p3;
            }
            dp = sqrt(2.0 * n as f64) * p2;
            let dz = p1 / dp;
            z -= dz;
            if fabs(dz) < NEWTON_EPS {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (dp * dp);
        weights[n - 1 - i] = weights[i];
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule { nodes, weights }
}

/// Gauss–Laguerre rule of order `n` for `∫₀^∞ f(x) e^{-x} dx`, exact for
/// polynomials of degree `2n − 1`.
pub fn gauss_laguerre(n: usize) -> QuadratureRule {
    assert!(n >= 2);
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let mut z = 0.0;
    for i in 0..n {
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * n as f64),
            1 => z + 15.0 / (1.0 + 2.5 * n as f64),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
            }
        };
        let mut dp = 0.0;
        let mut p2 = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            // Laguerre recurrence: (k+1) L_{k+1} = (2k+1−x) L_k − k L_{k−1}
            let mut p1 = 1.0;
            p2 = 0.0;
            for k in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = (((2 * k + 1) as f64 - z) * p2 - k as f64 * p3) / (k + 1) as f64;
            }
            dp = n as f64 * (p1 - p2) / z;
            let dz = p1 / dp;
            z -= dz;
            if fabs(dz) < NEWTON_EPS * if fabs(z) > 1.0 { fabs(z) } else { 1.0 } {
                break;
            }
        }
        nodes[i] = z;
        weights[i] = -1.0 / (dp * n as f64 * p2);
    }
    QuadratureRule { nodes, weights }
}

/// Fixed uniform-grid estimate: `panels` equal subintervals, one rule
/// application each. Used to fix the scale before the adaptive pass.
pub fn integrate_fixed_grid<F: Fn(f64) -> f64>(
    rule: &QuadratureRule,
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
) -> f64 {
    let w = (b - a) / panels as f64;
    (0..panels)
        .map(|k| rule.integrate(a + k as f64 * w, a + (k + 1) as f64 * w, f))
        .sum()
}

/// Adaptive Gauss–Legendre integration of `f` over `[a, b]` to the given
/// absolute tolerance. A panel is accepted when halving it changes the
/// estimate by less than the panel's share of the budget, or by less than
/// `floor` — the roundoff escape that stops subdivision once the
/// difference is dominated by floating-point noise (pass a small multiple
/// of machine epsilon times the integral's scale).
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    rule: &QuadratureRule,
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    floor: f64,
    max_depth: u32,
) -> Result<f64, QuadratureError> {
    let whole = rule.integrate(a, b, f);
    adaptive_panel(rule, f, a, b, whole, abs_tol, floor, max_depth)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_panel<F: Fn(f64) -> f64>(
    rule: &QuadratureRule,
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    floor: f64,
    depth: u32,
) -> Result<f64, QuadratureError> {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(a, mid, f);
    let right = rule.integrate(mid, b, f);
    let refined = left + right;
    let diff = fabs(refined - whole);
    if diff <= tol || diff <= floor {
        return Ok(refined);
    }
    if depth == 0 {
        return Err(QuadratureError::NoConvergence);
    }
    let l = adaptive_panel(rule, f, a, mid, left, 0.5 * tol, floor, depth - 1)?;
    let r = adaptive_panel(rule, f, mid, b, right, 0.5 * tol, floor, depth - 1)?;
    Ok(l + r)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuadratureError {
    /// Subdivision budget exhausted before the tolerance was met.
    NoConvergence,
}

impl core::fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            QuadratureError::NoConvergence => {
                write!(
                    f,
                    "adaptive quadrature did not converge within the subdivision budget"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QuadratureError {}

#[cfg(test)]
mod tests {
    use super::*;
    use libm::exp;

    const SQRT_PI: f64 = 1.772453850905516;

    #[test]
    fn legendre_weights_sum_to_interval_length() {
        for n in [5, 20, 41] {
            let rule = gauss_legendre(n);
            let total: f64 = rule.weights.iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "n={n}: {total}");
        }
    }

    #[test]
    fn legendre_exact_for_high_degree_polynomials() {
        let rule = gauss_legendre(20);
        // ∫₀¹ x^38 dx = 1/39, degree 38 < 2·20−1
        let v = rule.integrate(0.0, 1.0, |x| pow(x, 38.0));
        assert!((v - 1.0 / 39.0).abs() < 1e-15);
        // ∫₋₁¹ P₂(x) dx = 0
        let v = rule.integrate(-1.0, 1.0, |x| 1.5 * x * x - 0.5);
        assert!(v.abs() < 1e-14);
    }

    #[test]
    fn hermite_moments_exact() {
        let rule = gauss_hermite(64);
        let total: f64 = rule.weights.iter().sum();
        assert!((total - SQRT_PI).abs() / SQRT_PI < 1e-14);
        let v = rule.sum(|x| x * x);
        assert!((v - SQRT_PI / 2.0).abs() / SQRT_PI < 1e-14);
        let v = rule.sum(|x| pow(x, 10.0));
        let exact = 945.0 / 32.0 * SQRT_PI;
        assert!((v - exact).abs() / exact < 1e-13);
        assert!(rule.sum(|x| x * x * x).abs() < 1e-12);
    }

    #[test]
    fn hermite_nodes_symmetric() {
        let rule = gauss_hermite(64);
        for i in 0..rule.nodes.len() {
            let j = rule.nodes.len() - 1 - i;
            assert_eq!(rule.nodes[i], -rule.nodes[j]);
            assert_eq!(rule.weights[i], rule.weights[j]);
        }
    }

    #[test]
    fn laguerre_moments_exact() {
        let rule = gauss_laguerre(64);
        // ∫₀^∞ x^k e^{-x} = k!
        let mut exact = 1.0;
        for k in 0..8u32 {
            let v = rule.sum(|x| pow(x, k as f64));
            assert!((v - exact).abs() / exact < 1e-12, "k={k}: {v} vs {exact}");
            exact *= (k + 1) as f64;
        }
    }

    #[test]
    fn adaptive_exponential_tail() {
        let rule = gauss_legendre(20);
        let f = |x: f64| exp(-x);
        let v = integrate_adaptive(&rule, &f, 0.0, 40.0, 1e-13, 1e-16, 40).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn adaptive_sqrt_integrand() {
        let rule = gauss_legendre(20);
        let f = |x: f64| sqrt(x);
        let v = integrate_adaptive(&rule, &f, 0.0, 1.0, 1e-12, 1e-16, 50).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn adaptive_reports_non_convergence() {
        let rule = gauss_legendre(20);
        let f = |x: f64| if x == 0.0 { 0.0 } else { sqrt(x) };
        assert_eq!(
            integrate_adaptive(&rule, &f, 0.0, 1.0, 1e-14, 0.0, 2),
            Err(QuadratureError::NoConvergence)
        );
    }

    #[test]
    fn fixed_grid_estimates_wide_peaked_integrand() {
        let rule = gauss_legendre(20);
        // peak near the origin of a wide interval; a single rule
        // application would miss it
        let f = |x: f64| exp(-2.0 * x) * x * x;
        let v = integrate_fixed_grid(&rule, &f, 0.0, 800.0, 64);
        assert!((v - 0.25).abs() < 1e-6, "{v}");
    }
}
