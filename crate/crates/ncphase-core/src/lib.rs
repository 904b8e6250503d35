//! Exact operator algebra for a rotationally invariant noncommutative phase
//! space, together with the hydrogen-atom perturbation theory built on top
//! of it.
//!
//! The crate has two halves:
//!
//! * an exact symbolic engine ([`scalar`], [`generator`], [`expr`],
//!   [`observables`], [`suite`]) that normal-orders polynomials in the 18
//!   canonical generators `x_i, a_i, b_i, p_i, p^a_i, p^b_i` and verifies
//!   the commutation relations and invariance properties of the
//!   noncommutative algebra built from them;
//! * numerical modules ([`hydrogen`], [`oscillator`], [`corrections`],
//!   [`bounds`]) that evaluate hydrogen energy corrections induced by the
//!   noncommutativity and invert spectroscopic accuracy into upper bounds
//!   on the noncommutativity parameters.
//!
//! The symbolic half works over exact Gaussian-rational coefficients; no
//! floating point enters any identity check. The numerical half keeps
//! everything in Hartree atomic units; SI conversion is left to callers.
//!
//! The crate is `no_std`-compatible (`alloc` required); the default `std`
//! feature only forwards to the arithmetic backends.
//!
//! ```
//! use ncphase_core::{expr::OperatorExpr, observables, Representation};
//! use ncphase_core::scalar::ParamScalar;
//!
//! // [X_1, X_2] = iħ θ_12, exactly
//! let rep = Representation::standard();
//! let lhs = OperatorExpr::commutator(&rep.coordinate(1), &rep.coordinate(2));
//! let rhs = observables::theta_tensor(1, 2).scale(&ParamScalar::i_hbar());
//! assert_eq!(lhs, rhs);
//! assert_eq!(lhs.to_string(), "i*l0*a3");
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod corrections;
pub mod expr;
pub mod gauss;
pub mod generator;
pub mod hydrogen;
pub mod observables;
pub mod oscillator;
pub mod scalar;
pub mod suite;

pub use expr::OperatorExpr;
pub use generator::{GeneratorId, GeneratorKind};
pub use hydrogen::QuantumNumbers;
pub use observables::{Observable, Representation};
pub use oscillator::{NcMoments, NcParams, OscillatorParams};
pub use scalar::{GaussRational, ParamScalar, Symbol};
pub use suite::{SuiteOptions, SuiteReport};
