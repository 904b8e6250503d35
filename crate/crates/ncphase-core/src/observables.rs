//! Builders for the noncommutative observables: coordinates `X_i`, momenta
//! `P_i`, angular momenta, the noncommutativity tensors `θ_ij`, `η_ij`,
//! `γ_ij`, the squared distance `R²` and squared momentum magnitude `P²`,
//! and the auxiliary oscillator Hamiltonians.
//!
//! Everything is parameterised by a [`Representation`] carrying the two
//! coupling scalars, so tests can mutate or switch off the noncommutative
//! parts. The standard couplings are `l0/(2ℏ)` and `p0/(2ℏ)`:
//!
//! ```text
//! X_i = x_i + (l0/2ℏ) [a × p]_i
//! P_i = p_i + (p0/2ℏ) [r × p^b]_i
//! ```
//!
//! With these, `[X_i, X_j] = iℏ θ_ij`, `[P_i, P_j] = iℏ η_ij` and
//! `[X_i, P_j] = iℏ(δ_ij + γ_ij)` for `θ_ij = (l0/ℏ) ε_ijk a_k`,
//! `η_ij = (p0/ℏ) ε_ijk p^b_k` and `γ_ij = Σ_k θ_ik η_jk / 4`.

use alloc::vec;
use core::fmt;
use core::str::FromStr;

use crate::expr::OperatorExpr;
use crate::generator::{self, GeneratorId, GeneratorKind};
use crate::scalar::{ParamScalar, Symbol};

/// Levi-Civita symbol for 1-based axes.
pub fn epsilon(i: u8, j: u8, k: u8) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Cyclic successor of an axis: 1 → 2 → 3 → 1.
fn next_axis(i: u8) -> u8 {
    i % 3 + 1
}

/// The couplings of the noncommutative representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    /// Multiplies `[a × p]_i` inside `X_i`. Standard value: `l0/(2ℏ)`.
    coord_coupling: ParamScalar,
    /// Multiplies `[r × p^b]_i` inside `P_i`. Standard value: `p0/(2ℏ)`.
    momentum_coupling: ParamScalar,
}

impl Default for Representation {
    fn default() -> Self {
        Self::standard()
    }
}

impl Representation {
    pub fn standard() -> Self {
        Representation {
            coord_coupling: ParamScalar::monomial(
                1,
                2,
                false,
                &[(Symbol::L0, 1), (Symbol::Hbar, -1)],
            ),
            momentum_coupling: ParamScalar::monomial(
                1,
                2,
                false,
                &[(Symbol::P0, 1), (Symbol::Hbar, -1)],
            ),
        }
    }

    /// Arbitrary couplings; used to deliberately corrupt the representation
    /// in mutation tests.
    pub fn with_couplings(coord_coupling: ParamScalar, momentum_coupling: ParamScalar) -> Self {
        Representation {
            coord_coupling,
            momentum_coupling,
        }
    }

    /// Standard representation with the `1/2` dropped from the coordinate
    /// coupling (`l0/ℏ` instead of `l0/2ℏ`); breaks `[X_i, X_j]`.
    pub fn corrupted_coordinate_coupling() -> Self {
        Representation {
            coord_coupling: ParamScalar::monomial(
                1,
                1,
                false,
                &[(Symbol::L0, 1), (Symbol::Hbar, -1)],
            ),
            ..Self::standard()
        }
    }

    /// Noncommutative coordinate `X_i = x_i + c·[a × p]_i`.
    pub fn coordinate(&self, i: u8) -> OperatorExpr {
        let j = next_axis(i);
        let k = next_axis(j);
        OperatorExpr::from_raw_terms([
            (ParamScalar::one(), vec![generator::x(i)]),
            (
                self.coord_coupling.clone(),
                vec![generator::a(j), generator::p(k)],
            ),
            (
                -&self.coord_coupling,
                vec![generator::a(k), generator::p(j)],
            ),
        ])
    }

    /// Noncommutative momentum `P_i = p_i + c·[r × p^b]_i`.
    pub fn momentum(&self, i: u8) -> OperatorExpr {
        let j = next_axis(i);
        let k = next_axis(j);
        OperatorExpr::from_raw_terms([
            (ParamScalar::one(), vec![generator::p(i)]),
            (
                self.momentum_coupling.clone(),
                vec![generator::x(j), generator::pb(k)],
            ),
            (
                -&self.momentum_coupling,
                vec![generator::x(k), generator::pb(j)],
            ),
        ])
    }

    /// `R² = Σ_i X_i²`, the operand under the square root of the distance
    /// operator.
    pub fn distance_squared(&self) -> OperatorExpr {
        let mut sum = OperatorExpr::zero();
        for i in 1..=3 {
            let xi = self.coordinate(i);
            sum = &sum + &(&xi * &xi);
        }
        sum
    }

    /// `P² = Σ_i P_i²`, the operand under the square root of the momentum
    /// magnitude.
    pub fn momentum_magnitude_squared(&self) -> OperatorExpr {
        let mut sum = OperatorExpr::zero();
        for i in 1..=3 {
            let pi = self.momentum(i);
            sum = &sum + &(&pi * &pi);
        }
        sum
    }
}

/// Orbital angular momentum `L_i = [r × p]_i`.
pub fn angular_momentum(i: u8) -> OperatorExpr {
    let j = next_axis(i);
    let k = next_axis(j);
    OperatorExpr::from_raw_terms([
        (ParamScalar::one(), vec![generator::x(j), generator::p(k)]),
        (-&ParamScalar::one(), vec![generator::x(k), generator::p(j)]),
    ])
}

/// Total angular momentum
/// `L̃_i = [r × p]_i + [a × p^a]_i + [b × p^b]_i`; generates simultaneous
/// rotations of the physical and auxiliary variables.
pub fn total_angular_momentum(i: u8) -> OperatorExpr {
    let j = next_axis(i);
    let k = next_axis(j);
    let one = ParamScalar::one();
    OperatorExpr::from_raw_terms([
        (one.clone(), vec![generator::x(j), generator::p(k)]),
        (-&one, vec![generator::x(k), generator::p(j)]),
        (one.clone(), vec![generator::a(j), generator::pa(k)]),
        (-&one, vec![generator::a(k), generator::pa(j)]),
        (one.clone(), vec![generator::b(j), generator::pb(k)]),
        (-&one, vec![generator::b(k), generator::pb(j)]),
    ])
}

/// Tensor of coordinate noncommutativity `θ_ij = (l0/ℏ) ε_ijk a_k`.
pub fn theta_tensor(i: u8, j: u8) -> OperatorExpr {
    levi_civita_tensor(i, j, GeneratorKind::AuxCoordA, Symbol::L0)
}

/// Tensor of momentum noncommutativity `η_ij = (p0/ℏ) ε_ijk p^b_k`.
pub fn eta_tensor(i: u8, j: u8) -> OperatorExpr {
    levi_civita_tensor(i, j, GeneratorKind::AuxMomentumB, Symbol::P0)
}

fn levi_civita_tensor(i: u8, j: u8, kind: GeneratorKind, coupling: Symbol) -> OperatorExpr {
    let mut out = OperatorExpr::zero();
    for k in 1..=3 {
        let e = epsilon(i, j, k);
        if e != 0 {
            let c = ParamScalar::monomial(e, 1, false, &[(coupling, 1), (Symbol::Hbar, -1)]);
            out = &out + &OperatorExpr::monomial(c, vec![GeneratorId::new(kind, k)]);
        }
    }
    out
}

/// `γ_ij = Σ_k θ_ik η_jk / 4 = (l0 p0 / 4ℏ²) ((a·p^b) δ_ij − a_j p^b_i)`.
pub fn gamma_tensor(i: u8, j: u8) -> OperatorExpr {
    let mut sum = OperatorExpr::zero();
    for k in 1..=3 {
        sum = &sum + &(&theta_tensor(i, k) * &eta_tensor(j, k));
    }
    sum.scale(&ParamScalar::ratio(1, 4))
}

/// Scalar product of two operator 3-vectors.
pub fn dot(u: &[OperatorExpr; 3], v: &[OperatorExpr; 3]) -> OperatorExpr {
    let mut sum = OperatorExpr::zero();
    for k in 0..3 {
        sum = &sum + &(&u[k] * &v[k]);
    }
    sum
}

/// The 3-vector of a generator family.
pub fn family_vector(kind: GeneratorKind) -> [OperatorExpr; 3] {
    [1u8, 2, 3].map(|i| OperatorExpr::generator(GeneratorId::new(kind, i)))
}

/// `Σ_i g_i²` for a generator family (`r²`, `p²`, `a²`, ...).
pub fn family_squared(kind: GeneratorKind) -> OperatorExpr {
    let v = family_vector(kind);
    dot(&v, &v)
}

/// Auxiliary oscillator Hamiltonian `(1/2)(p^a)² + (κ/2) a²` (and the `b`
/// counterpart). The stiffness `m_osc ω²` is the single formal symbol
/// `kappa`; the kinetic term carries unit mass. Overall factors are
/// irrelevant for every commutator check these enter.
pub fn oscillator_hamiltonian_a() -> OperatorExpr {
    oscillator_hamiltonian(GeneratorKind::AuxCoordA, GeneratorKind::AuxMomentumA)
}

pub fn oscillator_hamiltonian_b() -> OperatorExpr {
    oscillator_hamiltonian(GeneratorKind::AuxCoordB, GeneratorKind::AuxMomentumB)
}

fn oscillator_hamiltonian(coord: GeneratorKind, momentum: GeneratorKind) -> OperatorExpr {
    let kinetic = family_squared(momentum).scale(&ParamScalar::ratio(1, 2));
    let potential =
        family_squared(coord).scale(&ParamScalar::monomial(1, 2, false, &[(Symbol::Kappa, 1)]));
    &kinetic + &potential
}

/// Observable identifiers accepted by [`build_observable`]; the string forms
/// are the ones the CLI exposes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Observable {
    /// `X_i` — noncommutative coordinate (one axis).
    X,
    /// `P_i` — noncommutative momentum (one axis).
    P,
    /// `L_i` — orbital angular momentum (one axis).
    L,
    /// `L̃_i` — total angular momentum (one axis).
    LTotal,
    /// `θ_ij` (two axes).
    ThetaTensor,
    /// `η_ij` (two axes).
    EtaTensor,
    /// `γ_ij` (two axes).
    GammaTensor,
    /// `R²` (no axis).
    DistanceSquared,
    /// `P²` (no axis).
    MomentumMagnitudeSquared,
    /// `H^a_osc` (no axis).
    OscillatorA,
    /// `H^b_osc` (no axis).
    OscillatorB,
}

impl Observable {
    /// Number of axis arguments the observable takes.
    pub fn arity(self) -> usize {
        match self {
            Observable::X | Observable::P | Observable::L | Observable::LTotal => 1,
            Observable::ThetaTensor | Observable::EtaTensor | Observable::GammaTensor => 2,
            Observable::DistanceSquared
            | Observable::MomentumMagnitudeSquared
            | Observable::OscillatorA
            | Observable::OscillatorB => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Observable::X => "X",
            Observable::P => "P",
            Observable::L => "L",
            Observable::LTotal => "Ltot",
            Observable::ThetaTensor => "theta",
            Observable::EtaTensor => "eta",
            Observable::GammaTensor => "gamma",
            Observable::DistanceSquared => "R2",
            Observable::MomentumMagnitudeSquared => "P2",
            Observable::OscillatorA => "Hosc_a",
            Observable::OscillatorB => "Hosc_b",
        }
    }
}

impl FromStr for Observable {
    type Err = ObservableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" => Ok(Observable::X),
            "P" => Ok(Observable::P),
            "L" => Ok(Observable::L),
            "Ltot" => Ok(Observable::LTotal),
            "theta" => Ok(Observable::ThetaTensor),
            "eta" => Ok(Observable::EtaTensor),
            "gamma" => Ok(Observable::GammaTensor),
            "R2" => Ok(Observable::DistanceSquared),
            "P2" => Ok(Observable::MomentumMagnitudeSquared),
            "Hosc_a" => Ok(Observable::OscillatorA),
            "Hosc_b" => Ok(Observable::OscillatorB),
            _ => Err(ObservableError::UnknownName),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ObservableError {
    UnknownName,
    /// Wrong number of axes, or an axis outside `{1, 2, 3}`.
    InvalidAxis,
}

impl fmt::Display for ObservableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObservableError::UnknownName => write!(f, "unknown observable name"),
            ObservableError::InvalidAxis => {
                write!(
                    f,
                    "invalid axis list (axes must be in 1..=3, arity must match)"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ObservableError {}

/// Build a named observable with the given axes in a representation.
pub fn build_observable(
    rep: &Representation,
    obs: Observable,
    axes: &[u8],
) -> Result<OperatorExpr, ObservableError> {
    if axes.len() != obs.arity() || axes.iter().any(|a| !(1..=3).contains(a)) {
        return Err(ObservableError::InvalidAxis);
    }
    Ok(match obs {
        Observable::X => rep.coordinate(axes[0]),
        Observable::P => rep.momentum(axes[0]),
        Observable::L => angular_momentum(axes[0]),
        Observable::LTotal => total_angular_momentum(axes[0]),
        Observable::ThetaTensor => theta_tensor(axes[0], axes[1]),
        Observable::EtaTensor => eta_tensor(axes[0], axes[1]),
        Observable::GammaTensor => gamma_tensor(axes[0], axes[1]),
        Observable::DistanceSquared => rep.distance_squared(),
        Observable::MomentumMagnitudeSquared => rep.momentum_magnitude_squared(),
        Observable::OscillatorA => oscillator_hamiltonian_a(),
        Observable::OscillatorB => oscillator_hamiltonian_b(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{a, p, pb, x};
    use alloc::string::ToString;

    #[test]
    fn coordinate_expansion() {
        // X_1 = x1 + (l0/2ħ)(a2 p3 − a3 p2)
        let rep = Representation::standard();
        let c = ParamScalar::monomial(1, 2, false, &[(Symbol::L0, 1), (Symbol::Hbar, -1)]);
        let expected = OperatorExpr::from_raw_terms([
            (ParamScalar::one(), vec![x(1)]),
            (c.clone(), vec![a(2), p(3)]),
            (-&c, vec![a(3), p(2)]),
        ]);
        assert_eq!(rep.coordinate(1), expected);
    }

    #[test]
    fn total_angular_momentum_axis3() {
        // L̃_3 = x1p2 − x2p1 + a1pa2 − a2pa1 + b1pb2 − b2pb1
        use crate::generator::{b, pa};
        let one = ParamScalar::one();
        let expected = OperatorExpr::from_raw_terms([
            (one.clone(), vec![x(1), p(2)]),
            (-&one, vec![x(2), p(1)]),
            (one.clone(), vec![a(1), pa(2)]),
            (-&one, vec![a(2), pa(1)]),
            (one.clone(), vec![b(1), pb(2)]),
            (-&one, vec![b(2), pb(1)]),
        ]);
        assert_eq!(total_angular_momentum(3), expected);
    }

    #[test]
    fn theta_eta_product() {
        // θ12·η12 = (l0 p0/ħ²)·a3·pb3
        let prod = &theta_tensor(1, 2) * &eta_tensor(1, 2);
        let c = ParamScalar::monomial(
            1,
            1,
            false,
            &[(Symbol::L0, 1), (Symbol::P0, 1), (Symbol::Hbar, -2)],
        );
        assert_eq!(prod, OperatorExpr::monomial(c, vec![a(3), pb(3)]));
    }

    #[test]
    fn gamma_diagonal_component() {
        // γ_11 = (l0 p0/4ħ²)(a2 pb2 + a3 pb3)
        let c = ParamScalar::monomial(
            1,
            4,
            false,
            &[(Symbol::L0, 1), (Symbol::P0, 1), (Symbol::Hbar, -2)],
        );
        let expected =
            OperatorExpr::from_raw_terms([(c.clone(), vec![a(2), pb(2)]), (c, vec![a(3), pb(3)])]);
        assert_eq!(gamma_tensor(1, 1), expected);
    }

    #[test]
    fn tensor_antisymmetry_and_diagonal() {
        for i in 1..=3u8 {
            assert!(theta_tensor(i, i).is_zero());
            assert!(eta_tensor(i, i).is_zero());
            for j in 1..=3u8 {
                assert_eq!(theta_tensor(i, j), -&theta_tensor(j, i));
                assert_eq!(eta_tensor(i, j), -&eta_tensor(j, i));
            }
        }
    }

    #[test]
    fn build_observable_errors() {
        let rep = Representation::standard();
        assert_eq!(
            "bogus".parse::<Observable>().unwrap_err(),
            ObservableError::UnknownName
        );
        assert_eq!(
            build_observable(&rep, Observable::X, &[4]).unwrap_err(),
            ObservableError::InvalidAxis
        );
        assert_eq!(
            build_observable(&rep, Observable::ThetaTensor, &[1]).unwrap_err(),
            ObservableError::InvalidAxis
        );
        assert!(build_observable(&rep, Observable::DistanceSquared, &[]).is_ok());
    }

    #[test]
    fn distance_squared_expansion() {
        // R² = r² − (l0/ħ)(a·L) + (l0²/4ħ²)(a²p² − (a·p)²)
        let rep = Representation::standard();
        let r2 = family_squared(GeneratorKind::Coord);
        let avec = family_vector(GeneratorKind::AuxCoordA);
        let pvec = family_vector(GeneratorKind::Momentum);
        let lorb: [OperatorExpr; 3] = [1u8, 2, 3].map(super::angular_momentum);
        let a_l = dot(&avec, &lorb).scale(&ParamScalar::monomial(
            -1,
            1,
            false,
            &[(Symbol::L0, 1), (Symbol::Hbar, -1)],
        ));
        let quad = (&(&family_squared(GeneratorKind::AuxCoordA)
            * &family_squared(GeneratorKind::Momentum))
            - &(&dot(&avec, &pvec) * &dot(&avec, &pvec)))
            .scale(&ParamScalar::monomial(
                1,
                4,
                false,
                &[(Symbol::L0, 2), (Symbol::Hbar, -2)],
            ));
        let expected = &(&r2 + &a_l) + &quad;
        assert_eq!(rep.distance_squared(), expected);
    }

    #[test]
    fn momentum_magnitude_squared_expansion() {
        // P² = p² − (p0/ħ)(p^b·L) + (p0²/4ħ²)(r²(p^b)² − (r·p^b)²)
        let rep = Representation::standard();
        let p2 = family_squared(GeneratorKind::Momentum);
        let rvec = family_vector(GeneratorKind::Coord);
        let pbvec = family_vector(GeneratorKind::AuxMomentumB);
        let lorb: [OperatorExpr; 3] = [1u8, 2, 3].map(super::angular_momentum);
        let pb_l = dot(&pbvec, &lorb).scale(&ParamScalar::monomial(
            -1,
            1,
            false,
            &[(Symbol::P0, 1), (Symbol::Hbar, -1)],
        ));
        let quad = (&(&family_squared(GeneratorKind::Coord)
            * &family_squared(GeneratorKind::AuxMomentumB))
            - &(&dot(&rvec, &pbvec) * &dot(&rvec, &pbvec)))
            .scale(&ParamScalar::monomial(
                1,
                4,
                false,
                &[(Symbol::P0, 2), (Symbol::Hbar, -2)],
            ));
        let expected = &(&p2 + &pb_l) + &quad;
        assert_eq!(rep.momentum_magnitude_squared(), expected);
    }

    #[test]
    fn mixed_commutators_with_auxiliary_variables() {
        // [X_1, P_2] = −(i l0 p0/4ħ) a2 pb2... the γ part at (1,2):
        // iħ γ_12 = −(i l0 p0/4ħ) a2 pb1
        let rep = Representation::standard();
        let c = OperatorExpr::commutator(&rep.coordinate(1), &rep.momentum(2));
        let expected = OperatorExpr::monomial(
            ParamScalar::monomial(
                -1,
                4,
                true,
                &[(Symbol::L0, 1), (Symbol::P0, 1), (Symbol::Hbar, -1)],
            ),
            vec![a(2), pb(1)],
        );
        assert_eq!(c, expected);

        // [X_1, p^a_2] = (i l0/2) p3
        let c = OperatorExpr::commutator(
            &rep.coordinate(1),
            &OperatorExpr::generator(crate::generator::pa(2)),
        );
        let expected = OperatorExpr::monomial(
            ParamScalar::monomial(1, 2, true, &[(Symbol::L0, 1)]),
            vec![p(3)],
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn observable_names_round_trip() {
        use Observable::*;
        for obs in [
            X,
            P,
            L,
            LTotal,
            ThetaTensor,
            EtaTensor,
            GammaTensor,
            DistanceSquared,
            MomentumMagnitudeSquared,
            OscillatorA,
            OscillatorB,
        ] {
            assert_eq!(obs.name().parse::<Observable>().unwrap(), obs);
            let _ = obs.name().to_string();
        }
    }
}
